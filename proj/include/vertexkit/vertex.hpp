#pragma once

#include <cstddef>
#include <vector>

#include "vertexkit/core.hpp"
#include "vertexkit/diagrams.hpp"
#include "vertexkit/hmatrix.hpp"
#include "vertexkit/qcert.hpp"

namespace vk {

class NotAVertexError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ZeroAntiDiagonalError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Intermediate quantities of the pattern solve, indexed by level j = 0..N-1.
struct PatternSolveState {
    std::size_t n = 1;
    std::vector<RVector> v;  // v[j] has length N-j, j = 1..N-1
    std::vector<RMatrix> M;  // M[j] = (L_j S_{N-j})^{-1}, size N-j, j = 0..N-1
    RVector q;               // q[j] = q_j, j = 1..N-1
};

PatternSolveState pattern_solve(const ArcDiagram& d);
QProfile q_from_pattern(const ArcDiagram& d);

/// Lower-triangular L_j for level j (size N-j) built from v_{j+1}..v_{N-1}.
RMatrix pattern_L(const ArcDiagram& d, const std::vector<RVector>& v, std::size_t j);
/// Same profile through explicit solves with L_j S_{N-j}; slow reference path.
QProfile q_from_pattern_direct(const ArcDiagram& d);

/// Sets h(i, k) for i = k+1..N-1 given h(k, k) and all columns right of k,
/// so that Q(., k) matches the target values q(m, k).
template <class QFun>
void solve_h_column(HMatrix& h, std::size_t k, const QFun& q);

HMatrix h_from_q(const QProfile& q);

HMatrix vertex_from_diagram(const ArcDiagram& d);
ArcDiagram diagram_from_vertex(const HMatrix& h);
ArcDiagram diagram_from_certificates(const CertificateSet& lam);

template <class QFun>
void solve_h_column(HMatrix& h, std::size_t k, const QFun& q) {
    const std::size_t n = h.horizon();
    if (k + 1 >= n) return;
    // csum[l] = h_{k,k} + ... + h_{l-1,k}
    std::vector<Rational> csum(n + 1);
    csum[k + 1] = h(k, k);
    for (std::size_t i = k + 1; i + 1 < n; ++i) {
        Rational s = q(n - i, k);
        for (std::size_t l = k + 1; l <= i; ++l) s -= csum[l] * q(n - i - 1, l);
        const Rational den = q(n - i - 1, i + 1);
        if (sgn(den) == 0) throw ZeroAntiDiagonalError("zero anti-diagonal Q value");
        h.at(i, k) = s / den - csum[i];
        csum[i + 1] = csum[i] + h(i, k);
    }
    h.at(n - 1, k) = q(1, k) - csum[n - 1];
}

}  // namespace vk
