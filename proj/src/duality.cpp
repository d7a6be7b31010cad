#include "vertexkit/duality.hpp"

#include "vertexkit/vertex.hpp"

namespace vk {

HMatrix anti_transpose(const HMatrix& h) {
    const std::size_t s = h.size();
    HMatrix out(h.horizon());
    for (std::size_t k = 1; k <= s; ++k)
        for (std::size_t j = 1; j <= k; ++j) out.at(k, j) = h(s + 1 - j, s + 1 - k);
    return out;
}

RMatrix delta_matrix(std::size_t n) {
    RMatrix d(n, n);
    for (std::size_t i = 1; i <= n; ++i) {
        d(i - 1, n - i) = 1;
        if (i < n) d(i - 1, n - i - 1) = -1;
    }
    return d;
}

RMatrix reversal_matrix(std::size_t n) {
    RMatrix t(n, n);
    for (std::size_t i = 0; i < n; ++i) t(i, n - 1 - i) = 1;
    return t;
}

RMatrix dual_lambda_via_inverse(const HMatrix& h) {
    const RMatrix d = delta_matrix(h.horizon());
    return d * invert(lambda_matrix(h)) * d;
}

std::optional<CertificateSet> dual_certificates_vertex(const HMatrix& h) {
    ArcDiagram d = diagram_from_vertex(h);
    if (!is_noncrossing(d)) return std::nullopt;
    const std::size_t n = d.n;
    PathCache pc = descendants(d);
    CertificateSet out(n);
    for (std::size_t i = 2; i <= n; ++i) {
        const std::size_t v = i - 1;
        const std::size_t j = pc.ell(v);
        out.at(n - j + 1, n - i + 1) = Rational(1) / d.weights[v - 1];
    }
    return out;
}

DualReport dual_report(const HMatrix& h) {
    DualReport r;
    r.dual_h = anti_transpose(h);
    r.dual_lambda = dual_lambda_via_inverse(h);
    r.dual_optimal = is_optimal(r.dual_h);
    if (r.dual_optimal) {
        r.route_agreement = certificates_from_lambda(r.dual_lambda) == certificates(r.dual_h);
    } else {
        r.route_agreement = !certificates_from_lambda(r.dual_lambda).all_nonnegative();
    }
    return r;
}

ArcDiagram dualize_basic_diagram(const ArcDiagram& d, bool use_shortcut) {
    if (!validate(d)) throw std::invalid_argument("invalid arc diagram");
    if (!is_noncrossing(d)) throw CrossingDiagramError("dualization needs a non-crossing diagram");
    if (d.n == 1) return singleton_diagram();
    if (use_shortcut) {
        if (d == ohm_diagram(d.n)) return dual_ohm_diagram(d.n);
        if (d == dual_ohm_diagram(d.n)) return ohm_diagram(d.n);
    }
    const std::size_t np = *decomposition_index(d);
    auto [left, right] = split_diagram(d, np);
    return glue_diagrams(dualize_basic_diagram(right, use_shortcut), dualize_basic_diagram(left, use_shortcut));
}

bool is_self_dual(const ArcDiagram& d) {
    if (!validate(d) || d.n % 2 != 0) return false;
    const std::size_t half = d.n / 2;
    if (!is_decomposable_at(d, half)) return false;
    auto [left, right] = split_diagram(d, half);
    if (!is_noncrossing(left)) return false;
    return right == dualize_basic_diagram(left);
}

RMatrix nu_combinatorial(const ArcDiagram& w) {
    if (w.weights.size() + 1 != w.n) throw NotAVertexError("nu_combinatorial needs arc weights");
    const std::size_t n = w.n;
    PathCache pc = descendants(w);
    std::vector<std::vector<bool>> on_path(n, std::vector<bool>(n + 1, false));
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t v : pc.path(i)) on_path[i - 1][v] = true;
    RMatrix nu(n, n);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) {
            Rational s = -1;
            for (std::size_t v = 1; v < n; ++v)
                if (on_path[i - 1][v] && on_path[j - 1][v]) s -= Rational(1) / w.weights[v - 1];
            nu(i - 1, j - 1) = s;
        }
    return nu;
}

RMatrix nu_combinatorial(const HMatrix& h) { return nu_combinatorial(diagram_from_vertex(h)); }

}  // namespace vk
