#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace vk {

using Rational = mpq_class;
using Integer = mpz_class;

class SingularMatrixError : public std::runtime_error {
public:
    SingularMatrixError() : std::runtime_error("singular matrix") {}
};

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class CapExceededError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Builds a canonical rational a/b; b must be nonzero.
Rational frac(long a, long b = 1);
Rational parse_rational(const std::string& s);
std::string to_string(const Rational& r);
bool is_canonical(const Rational& r);

Integer binomial_int(long n, long k);
/// Exact C(n, k), zero outside 0 <= k <= n.
Rational binomial(long n, long k);
Rational catalan(long m);
Integer factorial(long n);

/// Upper bound on horizons accepted by exact constructions.
/// Reads VERTEXKIT_MAX_N on first use (default 256).
std::size_t max_exact_n();
void set_max_exact_n(std::size_t n);
void require_exact_n(std::size_t n, const char* what);

using RVector = std::vector<Rational>;

class RMatrix {
public:
    RMatrix() = default;
    RMatrix(std::size_t rows, std::size_t cols);
    RMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static RMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    // 0-indexed access
    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    RVector row(std::size_t i) const;
    RVector col(std::size_t j) const;

    RMatrix transpose() const;
    bool operator==(const RMatrix& o) const;
    bool operator!=(const RMatrix& o) const { return !(*this == o); }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

RMatrix operator*(const RMatrix& a, const RMatrix& b);
RMatrix operator+(const RMatrix& a, const RMatrix& b);
RMatrix operator-(const RMatrix& a, const RMatrix& b);
RMatrix operator*(const Rational& s, const RMatrix& a);
RVector operator*(const RMatrix& a, const RVector& x);
/// Row vector times matrix.
RVector left_multiply(const RVector& x, const RMatrix& a);

Rational dot(const RVector& a, const RVector& b);
RVector operator+(const RVector& a, const RVector& b);
RVector operator-(const RVector& a, const RVector& b);
RVector operator*(const Rational& s, const RVector& a);

RVector solve_linear(const RMatrix& a, const RVector& b);
RMatrix invert(const RMatrix& a);
Rational determinant(const RMatrix& a);

/// r x r with entry (a,b) = (-1)^{a+b} C(a+b-1, a-1), 1-indexed.
RMatrix pascal_S(std::size_t r);
/// r x r with entry (a,b) = (-1)^{a+b} C(a+b, a).
RMatrix pascal_P(std::size_t r);
/// (r+1) x r with entry (a,b) = (-1)^{b-1} C(b, a-1).
RMatrix pascal_R(std::size_t r);

std::string to_string(const RMatrix& m);

}  // namespace vk
