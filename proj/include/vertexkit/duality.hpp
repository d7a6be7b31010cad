#pragma once

#include <optional>

#include "vertexkit/diagrams.hpp"
#include "vertexkit/hmatrix.hpp"
#include "vertexkit/qcert.hpp"

namespace vk {

struct DualReport {
    HMatrix dual_h;
    bool dual_optimal = false;
    RMatrix dual_lambda;
    bool route_agreement = false;
};

HMatrix anti_transpose(const HMatrix& h);
RMatrix delta_matrix(std::size_t n);
/// Order-reversal permutation matrix.
RMatrix reversal_matrix(std::size_t n);

RMatrix dual_lambda_via_inverse(const HMatrix& h);
/// Nullopt when the vertex diagram crosses.
std::optional<CertificateSet> dual_certificates_vertex(const HMatrix& h);
DualReport dual_report(const HMatrix& h);

/// With use_shortcut, OHM and Dual-OHM shapes are mapped to each other directly.
ArcDiagram dualize_basic_diagram(const ArcDiagram& d, bool use_shortcut = false);
bool is_self_dual(const ArcDiagram& d);

RMatrix nu_combinatorial(const HMatrix& h);
RMatrix nu_combinatorial(const ArcDiagram& weighted);

}  // namespace vk
