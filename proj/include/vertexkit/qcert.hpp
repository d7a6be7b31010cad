#pragma once

#include <cstddef>
#include <vector>

#include "vertexkit/core.hpp"
#include "vertexkit/hmatrix.hpp"

namespace vk {

/// Q(m, j) for 1 <= m <= N-1 and 1 <= j <= N-m.
class QProfile {
public:
    QProfile() = default;
    explicit QProfile(std::size_t n);

    std::size_t horizon() const { return n_; }
    /// Zero outside the stored triangle.
    Rational get(std::size_t m, std::size_t j) const;
    Rational& at(std::size_t m, std::size_t j);
    bool operator==(const QProfile& o) const { return n_ == o.n_ && q_ == o.q_; }

private:
    std::size_t n_ = 1;
    std::vector<std::vector<Rational>> q_;  // q_[m-1][j-1]
};

/// lambda(k, j) for 1 <= j < k <= N.
class CertificateSet {
public:
    struct Entry {
        std::size_t k, j;
        Rational value;
    };

    CertificateSet() = default;
    explicit CertificateSet(std::size_t n);

    std::size_t horizon() const { return n_; }
    const Rational& operator()(std::size_t k, std::size_t j) const;
    Rational& at(std::size_t k, std::size_t j);

    std::vector<Entry> nonzeros() const;
    Rational total() const;
    bool all_nonnegative() const;
    bool operator==(const CertificateSet& o) const { return n_ == o.n_ && lam_ == o.lam_; }

private:
    std::size_t n_ = 1;
    std::vector<std::vector<Rational>> lam_;  // lam_[k-2][j-1]
};

/// y0 and g_1..g_N; the remaining iterates follow from H.
struct ProofWitness {
    RVector y0;
    std::vector<RVector> g;
};

QProfile q_functions(const HMatrix& h);
/// Direct sum over ordered index chains; exponential, kept as a reference.
QProfile q_functions_bruteforce(const HMatrix& h);

bool check_invariance(const HMatrix& h);
bool check_invariance(const QProfile& q);

CertificateSet certificates(const HMatrix& h);
CertificateSet certificates(const QProfile& q);

bool is_optimal(const HMatrix& h);

/// Symmetric N x N matrix with off-diagonals lambda and Lambda * 1 = -e_N.
RMatrix lambda_matrix(const CertificateSet& lam);
RMatrix lambda_matrix(const HMatrix& h);
CertificateSet certificates_from_lambda(const RMatrix& lam);

/// Iterates y_0..y_{N-1} and x_1..x_N generated by the witness.
struct WitnessIterates {
    std::vector<RVector> y, x;
};
WitnessIterates witness_iterates(const HMatrix& h, const ProofWitness& w);

Rational verify_proof_identity(const HMatrix& h, const ProofWitness& w);
Rational verify_proof_identity(const HMatrix& h, const CertificateSet& lam, const ProofWitness& w);

/// J: all-ones lower-triangular N x N.
RMatrix ones_lower(std::size_t n);
/// N x N embedding with h_{i,j} placed at (i+1, j).
RMatrix shifted_embedding(const HMatrix& h);
bool verify_matrix_identity(const HMatrix& h, const RMatrix& lam);

Rational rho(const HMatrix& h);

}  // namespace vk
