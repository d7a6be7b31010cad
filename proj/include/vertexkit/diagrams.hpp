#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "vertexkit/core.hpp"

namespace vk {

/// Tree on nodes 1..N given by the parent map j -> k(j) for j < N.
struct ArcDiagram {
    std::size_t n = 1;
    std::vector<std::size_t> parent;  // parent[j-1] = k(j)
    std::vector<Rational> weights;    // optional, weights[j-1] on arc (k(j), j)

    std::size_t k(std::size_t j) const { return parent.at(j - 1); }
    bool operator==(const ArcDiagram& o) const { return n == o.n && parent == o.parent; }
    bool operator!=(const ArcDiagram& o) const { return !(*this == o); }
};

class NotDecomposableError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class CrossingDiagramError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

ArcDiagram make_diagram(std::vector<std::size_t> parent);
ArcDiagram singleton_diagram();
ArcDiagram ohm_diagram(std::size_t n);
ArcDiagram dual_ohm_diagram(std::size_t n);

bool validate(const ArcDiagram& d);
std::vector<std::size_t> increasing_path(const ArcDiagram& d, std::size_t j);
bool is_noncrossing(const ArcDiagram& d);
std::optional<std::size_t> decomposition_index(const ArcDiagram& d);
bool is_decomposable_at(const ArcDiagram& d, std::size_t np);
ArcDiagram glue_diagrams(const ArcDiagram& d1, const ArcDiagram& d2);
std::pair<ArcDiagram, ArcDiagram> split_diagram(const ArcDiagram& d, std::size_t np);
/// Recursive split down to singletons.
bool is_basic_recursive(const ArcDiagram& d);

struct PathCache {
    std::vector<std::vector<std::size_t>> paths;  // paths[j-1] = C(j)
    std::vector<std::size_t> min_descendant;     // min_descendant[v-1] = l(v)
    std::vector<std::set<std::size_t>> descendants;  // descendants[v-1] = I(v)

    const std::vector<std::size_t>& path(std::size_t j) const { return paths.at(j - 1); }
    std::size_t ell(std::size_t v) const { return min_descendant.at(v - 1); }
    const std::set<std::size_t>& interval(std::size_t v) const { return descendants.at(v - 1); }
};

PathCache descendants(const ArcDiagram& d);
/// Nodes of C(1); node j refers to iterate y_{j-1}.
std::vector<std::size_t> guaranteed_indices(const ArcDiagram& d);

/// Lazy walk over all parent maps on n nodes, optionally only non-crossing ones.
class DiagramEnumerator {
public:
    DiagramEnumerator(std::size_t n, bool basic_only, std::size_t cap = 9);
    bool next(ArcDiagram& out);

private:
    bool advance();
    std::size_t n_;
    bool basic_only_;
    bool done_ = false;
    bool started_ = false;
    std::vector<std::size_t> parent_;
};

std::vector<ArcDiagram> enumerate_diagrams(std::size_t n, bool basic_only, std::size_t cap = 9);

std::string render_ascii(const ArcDiagram& d);
std::string to_string(const ArcDiagram& d);

}  // namespace vk
