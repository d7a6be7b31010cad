#include "vertexkit/qcert.hpp"

#include <functional>

namespace vk {

QProfile::QProfile(std::size_t n) : n_(n) {
    if (n == 0) throw std::invalid_argument("horizon must be at least 1");
    q_.resize(n - 1);
    for (std::size_t m = 1; m < n; ++m) q_[m - 1].resize(n - m);
}

Rational QProfile::get(std::size_t m, std::size_t j) const {
    if (m < 1 || j < 1 || m + j > n_) return 0;
    return q_[m - 1][j - 1];
}

Rational& QProfile::at(std::size_t m, std::size_t j) {
    if (m < 1 || j < 1 || m + j > n_) throw std::out_of_range("Q index outside the profile");
    return q_[m - 1][j - 1];
}

CertificateSet::CertificateSet(std::size_t n) : n_(n) {
    if (n == 0) throw std::invalid_argument("horizon must be at least 1");
    lam_.resize(n - 1);
    for (std::size_t k = 2; k <= n; ++k) lam_[k - 2].resize(k - 1);
}

const Rational& CertificateSet::operator()(std::size_t k, std::size_t j) const { return lam_.at(k - 2).at(j - 1); }

Rational& CertificateSet::at(std::size_t k, std::size_t j) { return lam_.at(k - 2).at(j - 1); }

std::vector<CertificateSet::Entry> CertificateSet::nonzeros() const {
    std::vector<Entry> out;
    for (std::size_t k = 2; k <= n_; ++k)
        for (std::size_t j = 1; j < k; ++j)
            if (sgn(lam_[k - 2][j - 1]) != 0) out.push_back({k, j, lam_[k - 2][j - 1]});
    return out;
}

Rational CertificateSet::total() const {
    Rational s;
    for (const auto& row : lam_)
        for (const auto& v : row) s += v;
    return s;
}

bool CertificateSet::all_nonnegative() const {
    for (const auto& row : lam_)
        for (const auto& v : row)
            if (sgn(v) < 0) return false;
    return true;
}

namespace {

struct Scaled {
    std::vector<Integer> num;
    Integer den = 1;
};

Scaled scale_to_integers(const std::vector<Rational>& v) {
    Scaled out;
    for (const auto& x : v) mpz_lcm(out.den.get_mpz_t(), out.den.get_mpz_t(), x.get_den_mpz_t());
    out.num.resize(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out.num[i] = v[i].get_num() * (out.den / v[i].get_den());
    return out;
}

}  // namespace

QProfile q_functions(const HMatrix& h) {
    const std::size_t n = h.horizon();
    QProfile q(n);
    if (n == 1) return q;
    // c[j][k] = h_{j,j} + ... + h_{k-1,j} for j < k <= N, scaled to integers per column j
    std::vector<std::vector<Rational>> c(n);
    std::vector<Scaled> cs(n);
    for (std::size_t j = 1; j < n; ++j) {
        c[j].resize(n + 1);
        for (std::size_t k = j + 1; k <= n; ++k) c[j][k] = c[j][k - 1] + h(k - 1, j);
        cs[j] = scale_to_integers(c[j]);
    }
    for (std::size_t j = 1; j < n; ++j) q.at(1, j) = c[j][n];
    for (std::size_t m = 1; m + 1 < n; ++m) {
        std::vector<Rational> row(n + 1);
        for (std::size_t k = 1; k + m <= n; ++k) row[k] = q.get(m, k);
        const Scaled rs = scale_to_integers(row);
        Integer acc;
        for (std::size_t j = 1; j + m + 1 <= n; ++j) {
            acc = 0;
            for (std::size_t k = j + 1; k + m <= n; ++k) mpz_addmul(acc.get_mpz_t(), rs.num[k].get_mpz_t(), cs[j].num[k].get_mpz_t());
            Rational v(acc, rs.den * cs[j].den);
            v.canonicalize();
            q.at(m + 1, j) = v;
        }
    }
    return q;
}

QProfile q_functions_bruteforce(const HMatrix& h) {
    const std::size_t n = h.horizon();
    QProfile q(n);
    // chains j(1) <= i(1) < j(2) <= i(2) < ... < j(m) <= i(m) <= N-1
    std::function<void(std::size_t, std::size_t, std::size_t, std::size_t, const Rational&)> walk =
        [&](std::size_t start_j, std::size_t depth, std::size_t m, std::size_t j0, const Rational& prod) {
            if (depth == m) {
                q.at(m, j0) += prod;
                return;
            }
            std::size_t lo = start_j, hi = n - 1;
            for (std::size_t jr = lo; jr <= hi; ++jr) {
                if (depth == 0 && jr != j0) continue;
                for (std::size_t ir = jr; ir <= n - 1; ++ir) walk(ir + 1, depth + 1, m, j0, prod * h(ir, jr));
            }
        };
    for (std::size_t m = 1; m < n; ++m)
        for (std::size_t j = 1; j + m <= n; ++j) walk(j, 0, m, j, Rational(1));
    return q;
}

bool check_invariance(const QProfile& q) {
    const std::size_t n = q.horizon();
    for (std::size_t k = 1; k < n; ++k) {
        Rational s;
        for (std::size_t j = 1; j + k <= n; ++j) s += q.get(k, j);
        if (s != binomial(static_cast<long>(n), static_cast<long>(k + 1)) / static_cast<long>(n)) return false;
    }
    return true;
}

bool check_invariance(const HMatrix& h) { return check_invariance(q_functions(h)); }

CertificateSet certificates(const QProfile& q) {
    const std::size_t n = q.horizon();
    CertificateSet lam(n);
    if (n == 1) return lam;
    const Rational nn = static_cast<long>(n);
    for (std::size_t j = 1; j < n; ++j) {
        Rational s;
        for (std::size_t m = 1; m + j <= n; ++m) s += (m % 2 ? 1 : -1) * q.get(m, j);
        lam.at(n, j) = nn * s;
    }
    // column k of Q as integers a[k][m] over a common denominator
    std::vector<Scaled> a(n);
    for (std::size_t k = 1; k < n; ++k) {
        std::vector<Rational> col(n);
        for (std::size_t m = 1; m + k <= n; ++m) col[m] = q.get(m, k);
        a[k] = scale_to_integers(col);
    }
    std::vector<std::vector<Integer>> binom(n, std::vector<Integer>(n));
    for (std::size_t l = 0; l < n; ++l)
        for (std::size_t m = 0; m < n; ++m) binom[l][m] = binomial_int(static_cast<long>(l + m), static_cast<long>(m));
    // w[k][l] * den_k = sum_m (-1)^m C(l+m, m) Q(m, k), for m <= N-k
    std::vector<std::vector<Integer>> w(n, std::vector<Integer>(n));
    for (std::size_t k = 2; k < n; ++k)
        for (std::size_t l = 1; l < n; ++l) {
            Integer& s = w[k][l];
            for (std::size_t m = 1; m + k <= n; ++m) {
                if (m % 2) mpz_submul(s.get_mpz_t(), binom[l][m].get_mpz_t(), a[k].num[m].get_mpz_t());
                else mpz_addmul(s.get_mpz_t(), binom[l][m].get_mpz_t(), a[k].num[m].get_mpz_t());
            }
        }
    Integer acc;
    for (std::size_t k = 2; k < n; ++k)
        for (std::size_t j = 1; j < k; ++j) {
            acc = 0;
            for (std::size_t l = 1; l + j <= n; ++l) {
                if (l % 2) mpz_addmul(acc.get_mpz_t(), a[j].num[l].get_mpz_t(), w[k][l].get_mpz_t());
                else mpz_submul(acc.get_mpz_t(), a[j].num[l].get_mpz_t(), w[k][l].get_mpz_t());
            }
            Rational v(acc, a[j].den * a[k].den);
            v.canonicalize();
            lam.at(k, j) = nn * v;
        }
    return lam;
}

CertificateSet certificates(const HMatrix& h) { return certificates(q_functions(h)); }

bool is_optimal(const HMatrix& h) {
    QProfile q = q_functions(h);
    return check_invariance(q) && certificates(q).all_nonnegative();
}

RMatrix lambda_matrix(const CertificateSet& lam) {
    const std::size_t n = lam.horizon();
    RMatrix m(n, n);
    for (std::size_t k = 2; k <= n; ++k)
        for (std::size_t j = 1; j < k; ++j) {
            m(k - 1, j - 1) = lam(k, j);
            m(j - 1, k - 1) = lam(k, j);
        }
    for (std::size_t i = 0; i < n; ++i) {
        Rational s;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) s += m(i, j);
        m(i, i) = -s;
    }
    m(n - 1, n - 1) -= 1;
    return m;
}

RMatrix lambda_matrix(const HMatrix& h) { return lambda_matrix(certificates(h)); }

CertificateSet certificates_from_lambda(const RMatrix& lam) {
    if (!lam.square() || lam.rows() == 0) throw DimensionError("lambda matrix must be square and nonempty");
    CertificateSet out(lam.rows());
    for (std::size_t k = 2; k <= lam.rows(); ++k)
        for (std::size_t j = 1; j < k; ++j) out.at(k, j) = lam(k - 1, j - 1);
    return out;
}

WitnessIterates witness_iterates(const HMatrix& h, const ProofWitness& w) {
    const std::size_t n = h.horizon();
    if (w.g.size() != n) throw DimensionError("witness needs exactly N residual vectors");
    const std::size_t d = w.y0.size();
    for (const auto& g : w.g)
        if (g.size() != d) throw DimensionError("witness vectors differ in dimension");
    WitnessIterates it;
    it.y.push_back(w.y0);
    for (std::size_t k = 1; k < n; ++k) {
        RVector y = it.y.back();
        for (std::size_t j = 1; j <= k; ++j) {
            if (sgn(h(k, j)) == 0) continue;
            Rational c = 2 * h(k, j);
            for (std::size_t i = 0; i < d; ++i) y[i] -= c * w.g[j - 1][i];
        }
        it.y.push_back(std::move(y));
    }
    for (std::size_t j = 1; j <= n; ++j) it.x.push_back(it.y[j - 1] - w.g[j - 1]);
    return it;
}

Rational verify_proof_identity(const HMatrix& h, const CertificateSet& lam, const ProofWitness& w) {
    const std::size_t n = h.horizon();
    if (lam.horizon() != n) throw DimensionError("certificate horizon mismatch");
    WitnessIterates it = witness_iterates(h, w);
    const RVector& gn = w.g[n - 1];
    Rational total = static_cast<long>(n) * dot(gn, gn) + dot(gn, it.x[n - 1] - w.y0);
    for (std::size_t k = 2; k <= n; ++k)
        for (std::size_t j = 1; j < k; ++j) {
            if (sgn(lam(k, j)) == 0) continue;
            total += lam(k, j) * dot(it.x[k - 1] - it.x[j - 1], w.g[k - 1] - w.g[j - 1]);
        }
    return total;
}

Rational verify_proof_identity(const HMatrix& h, const ProofWitness& w) {
    return verify_proof_identity(h, certificates(h), w);
}

RMatrix ones_lower(std::size_t n) {
    RMatrix j(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b <= a; ++b) j(a, b) = 1;
    return j;
}

RMatrix shifted_embedding(const HMatrix& h) {
    const std::size_t n = h.horizon();
    RMatrix t(n, n);
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 1; j <= i; ++j) t(i, j - 1) = h(i, j);
    return t;
}

bool verify_matrix_identity(const HMatrix& h, const RMatrix& lam) {
    const std::size_t n = h.horizon();
    if (lam.rows() != n || lam.cols() != n) return false;
    if (lam != lam.transpose()) return false;
    for (std::size_t i = 0; i < n; ++i) {
        Rational s;
        for (std::size_t j = 0; j < n; ++j) s += lam(i, j);
        if (s != (i + 1 == n ? -1 : 0)) return false;
    }
    RMatrix a = lam * (ones_lower(n) * shifted_embedding(h));
    RMatrix e = lam + a + a.transpose();
    e(n - 1, n - 1) += static_cast<long>(n);
    return e == RMatrix(n, n);
}

Rational rho(const HMatrix& h) { return certificates(h).total(); }

}  // namespace vk
