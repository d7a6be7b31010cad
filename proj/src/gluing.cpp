#include "vertexkit/gluing.hpp"

#include "vertexkit/vertex.hpp"

namespace vk {

Rational glued_column_q(std::size_t np, std::size_t n, std::size_t m) {
    const long a = static_cast<long>(np), nn = static_cast<long>(n), mm = static_cast<long>(m);
    return frac(a * (nn - a + 1), nn * (mm + 1)) * binomial(nn - a - 1, mm - 1);
}

HMatrix glue_h(const HMatrix& h1, const HMatrix& h2, bool check_inputs) {
    if (check_inputs && (!is_optimal(h1) || !is_optimal(h2))) throw NonOptimalInputError("glue_h requires optimal inputs");
    const std::size_t np = h1.horizon();
    const std::size_t n = np + h2.horizon();
    const long N = static_cast<long>(n), Np = static_cast<long>(np);
    HMatrix h(n);
    for (std::size_t k = 1; k < np; ++k)
        for (std::size_t j = 1; j <= k; ++j) h.at(k, j) = h1(k, j);
    const Rational scale = frac(-(N - Np), N);
    for (std::size_t j = 1; j < np; ++j) {
        Rational s;
        for (std::size_t k = j; k < np; ++k) s += h1(k, j);
        h.at(np, j) = scale * s;
    }
    h.at(np, np) = frac(Np * (N - Np), N);
    for (std::size_t k = 1; k < h2.horizon(); ++k)
        for (std::size_t j = 1; j <= k; ++j) h.at(np + k, np + j) = h2(k, j);
    QProfile q2 = q_functions(h2);
    auto target = [&](std::size_t m, std::size_t j) -> Rational {
        if (m < 1 || m + j > n) return 0;
        if (j == np) return glued_column_q(np, n, m);
        return q2.get(m, j - np);
    };
    solve_h_column(h, np, target);
    return h;
}

CertificateSet glue_lambda(const CertificateSet& l1, const CertificateSet& l2, std::size_t np, std::size_t n) {
    if (l1.horizon() != np || l2.horizon() + np != n) throw DimensionError("certificate horizons do not match the gluing");
    CertificateSet out(n);
    const long N = static_cast<long>(n), Np = static_cast<long>(np);
    const Rational left = frac(Np, N), right = frac(N, N - Np);
    for (std::size_t k = 2; k <= np; ++k)
        for (std::size_t j = 1; j < k; ++j) out.at(k, j) = left * l1(k, j);
    for (std::size_t k = 2; k <= l2.horizon(); ++k)
        for (std::size_t j = 1; j < k; ++j) out.at(np + k, np + j) = right * l2(k, j);
    out.at(n, np) = frac(Np, N - Np);
    return out;
}

bool verify_gluing_theorem(const HMatrix& h1, const HMatrix& h2) {
    HMatrix h = glue_h(h1, h2);
    QProfile q = q_functions(h);
    if (!check_invariance(q)) return false;
    CertificateSet lam = certificates(q);
    if (!lam.all_nonnegative()) return false;
    return lam == glue_lambda(certificates(h1), certificates(h2), h1.horizon(), h.horizon());
}

bool is_basic(const HMatrix& h) {
    try {
        return is_noncrossing(diagram_from_vertex(h));
    } catch (const NotAVertexError&) {
        return false;
    }
}

}  // namespace vk
