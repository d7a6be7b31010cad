#include "vertexkit/diagrams.hpp"

#include <algorithm>
#include <sstream>

namespace vk {

ArcDiagram make_diagram(std::vector<std::size_t> parent) {
    ArcDiagram d;
    d.n = parent.size() + 1;
    d.parent = std::move(parent);
    return d;
}

ArcDiagram singleton_diagram() { return ArcDiagram{}; }

ArcDiagram ohm_diagram(std::size_t n) {
    std::vector<std::size_t> p;
    for (std::size_t j = 1; j < n; ++j) p.push_back(j + 1);
    return make_diagram(std::move(p));
}

ArcDiagram dual_ohm_diagram(std::size_t n) { return make_diagram(std::vector<std::size_t>(n ? n - 1 : 0, n)); }

bool validate(const ArcDiagram& d) {
    if (d.n < 1 || d.parent.size() + 1 != d.n) return false;
    for (std::size_t j = 1; j < d.n; ++j)
        if (d.k(j) <= j || d.k(j) > d.n) return false;
    if (!d.weights.empty()) {
        if (d.weights.size() != d.parent.size()) return false;
        for (const auto& w : d.weights)
            if (sgn(w) <= 0) return false;
    }
    return true;
}

std::vector<std::size_t> increasing_path(const ArcDiagram& d, std::size_t j) {
    if (j < 1 || j > d.n) throw std::out_of_range("node outside diagram");
    std::vector<std::size_t> path{j};
    while (path.back() != d.n) path.push_back(d.k(path.back()));
    return path;
}

bool is_noncrossing(const ArcDiagram& d) {
    for (std::size_t a = 1; a < d.n; ++a)
        for (std::size_t b = a + 1; b < d.k(a); ++b)
            if (d.k(b) > d.k(a)) return false;
    return true;
}

bool is_decomposable_at(const ArcDiagram& d, std::size_t np) {
    if (np < 1 || np >= d.n || d.k(np) != d.n) return false;
    for (std::size_t j = 1; j < np; ++j)
        if (d.k(j) > np) return false;
    return true;
}

std::optional<std::size_t> decomposition_index(const ArcDiagram& d) {
    for (std::size_t np = 1; np < d.n; ++np)
        if (is_decomposable_at(d, np)) return np;
    return std::nullopt;
}

ArcDiagram glue_diagrams(const ArcDiagram& d1, const ArcDiagram& d2) {
    ArcDiagram g;
    g.n = d1.n + d2.n;
    g.parent = d1.parent;
    g.parent.push_back(g.n);
    for (std::size_t kk : d2.parent) g.parent.push_back(kk + d1.n);
    return g;
}

std::pair<ArcDiagram, ArcDiagram> split_diagram(const ArcDiagram& d, std::size_t np) {
    if (!is_decomposable_at(d, np)) throw NotDecomposableError("diagram is not decomposable at " + std::to_string(np));
    ArcDiagram left, right;
    left.n = np;
    left.parent.assign(d.parent.begin(), d.parent.begin() + static_cast<std::ptrdiff_t>(np - 1));
    right.n = d.n - np;
    for (std::size_t j = np + 1; j < d.n; ++j) right.parent.push_back(d.k(j) - np);
    return {left, right};
}

bool is_basic_recursive(const ArcDiagram& d) {
    if (d.n == 1) return true;
    auto np = decomposition_index(d);
    if (!np) return false;
    auto [a, b] = split_diagram(d, *np);
    return is_basic_recursive(a) && is_basic_recursive(b);
}

PathCache descendants(const ArcDiagram& d) {
    PathCache c;
    c.paths.resize(d.n);
    c.min_descendant.assign(d.n, 0);
    c.descendants.resize(d.n);
    for (std::size_t j = 1; j <= d.n; ++j) {
        c.paths[j - 1] = increasing_path(d, j);
        for (std::size_t v : c.paths[j - 1]) {
            c.descendants[v - 1].insert(j);
            if (c.min_descendant[v - 1] == 0) c.min_descendant[v - 1] = j;
        }
    }
    return c;
}

std::vector<std::size_t> guaranteed_indices(const ArcDiagram& d) {
    if (!is_noncrossing(d)) throw CrossingDiagramError("guarantee path is defined for non-crossing diagrams");
    return increasing_path(d, 1);
}

DiagramEnumerator::DiagramEnumerator(std::size_t n, bool basic_only, std::size_t cap) : n_(n), basic_only_(basic_only) {
    if (n < 1) throw std::invalid_argument("diagram needs at least one node");
    if (n > cap) throw CapExceededError("enumeration size " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    for (std::size_t j = 1; j < n; ++j) parent_.push_back(j + 1);
}

bool DiagramEnumerator::advance() {
    // odometer over k(j) in {j+1..N}, last position fastest
    for (std::size_t j = n_ - 1; j >= 1; --j) {
        if (parent_[j - 1] < n_) {
            ++parent_[j - 1];
            return true;
        }
        parent_[j - 1] = j + 1;
        if (j == 1) break;
    }
    return false;
}

bool DiagramEnumerator::next(ArcDiagram& out) {
    while (!done_) {
        if (started_ && !advance()) {
            done_ = true;
            break;
        }
        started_ = true;
        out = make_diagram(parent_);
        if (!basic_only_ || is_noncrossing(out)) return true;
    }
    return false;
}

std::vector<ArcDiagram> enumerate_diagrams(std::size_t n, bool basic_only, std::size_t cap) {
    DiagramEnumerator e(n, basic_only, cap);
    std::vector<ArcDiagram> out;
    ArcDiagram d;
    while (e.next(d)) out.push_back(d);
    return out;
}

std::string render_ascii(const ArcDiagram& d) {
    const std::size_t w = std::to_string(d.n).size() + 1;
    auto col = [&](std::size_t node) { return (node - 1) * w + w / 2; };
    const std::size_t width = d.n * w;
    // arcs sorted by length so that nested arcs stack outward
    std::vector<std::size_t> order;
    for (std::size_t j = 1; j < d.n; ++j) order.push_back(j);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return d.k(a) - a > d.k(b) - b; });
    std::ostringstream os;
    for (std::size_t j : order) {
        std::string line(width, ' ');
        for (std::size_t c = col(j); c <= col(d.k(j)); ++c) line[c] = '-';
        line[col(j)] = '[';
        line[col(d.k(j))] = ']';
        line.erase(line.find_last_not_of(' ') + 1);
        os << line << '\n';
    }
    std::string nodes;
    for (std::size_t v = 1; v <= d.n; ++v) {
        std::string s = std::to_string(v);
        while (nodes.size() + s.size() < col(v) + 1) nodes += ' ';
        nodes += s;
    }
    os << nodes << '\n';
    return os.str();
}

std::string to_string(const ArcDiagram& d) {
    std::ostringstream os;
    os << '(';
    for (std::size_t j = 0; j < d.parent.size(); ++j) os << (j ? "," : "") << d.parent[j];
    os << ')';
    return os.str();
}

}  // namespace vk
