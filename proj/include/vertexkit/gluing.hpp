#pragma once

#include "vertexkit/diagrams.hpp"
#include "vertexkit/hmatrix.hpp"
#include "vertexkit/qcert.hpp"

namespace vk {

class NonOptimalInputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Glued step-size matrix; inputs of horizons N' and N-N' give horizon N.
/// With check_inputs, both inputs must pass is_optimal.
HMatrix glue_h(const HMatrix& h1, const HMatrix& h2, bool check_inputs = true);
CertificateSet glue_lambda(const CertificateSet& l1, const CertificateSet& l2, std::size_t np, std::size_t n);
bool verify_gluing_theorem(const HMatrix& h1, const HMatrix& h2);

/// Target Q(m, N') of the glued column.
Rational glued_column_q(std::size_t np, std::size_t n, std::size_t m);

bool is_basic(const HMatrix& h);

}  // namespace vk
