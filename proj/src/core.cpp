#include "vertexkit/core.hpp"

#include <atomic>
#include <cstdlib>
#include <sstream>

namespace vk {

Rational frac(long a, long b) {
    if (b == 0) throw std::domain_error("zero denominator");
    Rational r(a, b);
    r.canonicalize();
    return r;
}

Rational parse_rational(const std::string& s) {
    Rational r;
    if (s.empty() || r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: '" + s + "'");
    if (r.get_den() == 0) throw std::domain_error("zero denominator: '" + s + "'");
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }

bool is_canonical(const Rational& r) {
    if (sgn(r.get_den()) <= 0) return false;
    Integer g;
    Integer n = abs(r.get_num());
    mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), r.get_den().get_mpz_t());
    return g == 1;
}

Integer binomial_int(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

Rational binomial(long n, long k) { return Rational(binomial_int(n, k)); }

Rational catalan(long m) { return binomial(2 * m, m) / (m + 1); }

Integer factorial(long n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

namespace {
std::atomic<std::size_t> g_max_n{0};

std::size_t env_max_n() {
    if (const char* s = std::getenv("VERTEXKIT_MAX_N")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(s, &end, 10);
        if (end != s && v > 0) return v;
    }
    return 256;
}
}  // namespace

std::size_t max_exact_n() {
    std::size_t v = g_max_n.load();
    if (v == 0) {
        v = env_max_n();
        g_max_n.store(v);
    }
    return v;
}

void set_max_exact_n(std::size_t n) { g_max_n.store(n); }

void require_exact_n(std::size_t n, const char* what) {
    if (n > max_exact_n()) {
        std::ostringstream os;
        os << what << ": horizon " << n << " exceeds exact-mode cap " << max_exact_n();
        throw CapExceededError(os.str());
    }
}

RMatrix::RMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

RMatrix::RMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionError("ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

RMatrix RMatrix::identity(std::size_t n) {
    RMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RVector RMatrix::row(std::size_t i) const {
    return RVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

RVector RMatrix::col(std::size_t j) const {
    RVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
}

RMatrix RMatrix::transpose() const {
    RMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool RMatrix::operator==(const RMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

RMatrix operator*(const RMatrix& a, const RMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("matrix product shape mismatch");
    RMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (sgn(a(i, k)) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (sgn(b(k, j)) != 0) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

RMatrix operator+(const RMatrix& a, const RMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("matrix sum shape mismatch");
    RMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
    return c;
}

RMatrix operator-(const RMatrix& a, const RMatrix& b) { return a + Rational(-1) * b; }

RMatrix operator*(const Rational& s, const RMatrix& a) {
    RMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = s * a(i, j);
    return c;
}

RVector operator*(const RMatrix& a, const RVector& x) {
    if (a.cols() != x.size()) throw DimensionError("matrix-vector shape mismatch");
    RVector y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (sgn(a(i, j)) != 0) y[i] += a(i, j) * x[j];
    return y;
}

RVector left_multiply(const RVector& x, const RMatrix& a) {
    if (a.rows() != x.size()) throw DimensionError("vector-matrix shape mismatch");
    RVector y(a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (sgn(x[i]) == 0) continue;
        for (std::size_t j = 0; j < a.cols(); ++j) y[j] += x[i] * a(i, j);
    }
    return y;
}

Rational dot(const RVector& a, const RVector& b) {
    if (a.size() != b.size()) throw DimensionError("dot product length mismatch");
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

RVector operator+(const RVector& a, const RVector& b) {
    if (a.size() != b.size()) throw DimensionError("vector sum length mismatch");
    RVector c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

RVector operator-(const RVector& a, const RVector& b) {
    if (a.size() != b.size()) throw DimensionError("vector difference length mismatch");
    RVector c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
    return c;
}

RVector operator*(const Rational& s, const RVector& a) {
    RVector c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = s * a[i];
    return c;
}

namespace {

// Forward elimination on [A | B] in place; returns the determinant of A.
Rational eliminate(RMatrix& a, RMatrix& b) {
    const std::size_t n = a.rows();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(a(p, c)) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
            for (std::size_t j = 0; j < b.cols(); ++j) std::swap(b(p, j), b(c, j));
            det = -det;
        }
        det *= a(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (sgn(a(r, c)) == 0) continue;
            Rational f = a(r, c) / a(c, c);
            for (std::size_t j = c; j < n; ++j) a(r, j) -= f * a(c, j);
            for (std::size_t j = 0; j < b.cols(); ++j) b(r, j) -= f * b(c, j);
        }
    }
    return det;
}

void back_substitute(const RMatrix& a, RMatrix& b) {
    const std::size_t n = a.rows();
    for (std::size_t i = n; i-- > 0;) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Rational s = b(i, j);
            for (std::size_t k = i + 1; k < n; ++k)
                if (sgn(a(i, k)) != 0) s -= a(i, k) * b(k, j);
            b(i, j) = s / a(i, i);
        }
    }
}

}  // namespace

RVector solve_linear(const RMatrix& a, const RVector& b) {
    if (!a.square() || a.rows() != b.size()) throw DimensionError("solve_linear shape mismatch");
    RMatrix u = a;
    RMatrix rhs(b.size(), 1);
    for (std::size_t i = 0; i < b.size(); ++i) rhs(i, 0) = b[i];
    if (sgn(eliminate(u, rhs)) == 0) throw SingularMatrixError();
    back_substitute(u, rhs);
    return rhs.col(0);
}

RMatrix invert(const RMatrix& a) {
    if (!a.square()) throw DimensionError("invert requires a square matrix");
    RMatrix u = a;
    RMatrix rhs = RMatrix::identity(a.rows());
    if (sgn(eliminate(u, rhs)) == 0) throw SingularMatrixError();
    back_substitute(u, rhs);
    return rhs;
}

Rational determinant(const RMatrix& a) {
    if (!a.square()) throw DimensionError("determinant requires a square matrix");
    RMatrix u = a;
    RMatrix none(a.rows(), 0);
    return eliminate(u, none);
}

namespace {
Rational sign_pow(long e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }
}  // namespace

RMatrix pascal_S(std::size_t r) {
    RMatrix m(r, r);
    for (std::size_t a = 1; a <= r; ++a)
        for (std::size_t b = 1; b <= r; ++b)
            m(a - 1, b - 1) = sign_pow(static_cast<long>(a + b)) * binomial(static_cast<long>(a + b - 1), static_cast<long>(a - 1));
    return m;
}

RMatrix pascal_P(std::size_t r) {
    RMatrix m(r, r);
    for (std::size_t a = 1; a <= r; ++a)
        for (std::size_t b = 1; b <= r; ++b)
            m(a - 1, b - 1) = sign_pow(static_cast<long>(a + b)) * binomial(static_cast<long>(a + b), static_cast<long>(a));
    return m;
}

RMatrix pascal_R(std::size_t r) {
    RMatrix m(r + 1, r);
    for (std::size_t a = 1; a <= r + 1; ++a)
        for (std::size_t b = 1; b <= r; ++b)
            m(a - 1, b - 1) = sign_pow(static_cast<long>(b - 1)) * binomial(static_cast<long>(b), static_cast<long>(a - 1));
    return m;
}

std::string to_string(const RMatrix& m) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << to_string(m(i, j));
    }
    os << ']';
    return os.str();
}

}  // namespace vk
