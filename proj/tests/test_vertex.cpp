#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "vertexkit/diagrams.hpp"
#include "vertexkit/qcert.hpp"
#include "vertexkit/vertex.hpp"

using namespace vk;

namespace {
HMatrix ohm4() { return oracle::hm({{"1/2"}, {"-1/6", "2/3"}, {"-1/12", "-1/6", "3/4"}, {"-1/20", "-1/10", "-3/20", "4/5"}}); }
HMatrix dual4() { return oracle::hm({{"4/5"}, {"-3/20", "3/4"}, {"-1/10", "-1/6", "2/3"}, {"-1/20", "-1/12", "-1/6", "1/2"}}); }
HMatrix rdo2() { return oracle::hm({{"2/3"}, {"-1/6", "1/2"}, {"-1/5", "-1/5", "6/5"}, {"0", "0", "-3/10", "1/2"}}); }
HMatrix glued9() {
    return oracle::hm({{"2/3"},
                       {"-1/6", "1/2"},
                       {"-1/5", "-1/5", "6/5"},
                       {"0", "0", "-3/10", "1/2"},
                       {"-3/20", "-3/20", "-9/20", "-1/4", "5/2"},
                       {"0", "0", "0", "0", "-1/4", "1/2"},
                       {"0", "0", "0", "0", "-1/4", "-1/6", "2/3"},
                       {"0", "0", "0", "0", "-1/4", "-1/12", "-1/6", "3/4"},
                       {"0", "0", "0", "0", "-1/4", "-1/20", "-1/10", "-3/20", "4/5"}});
}
}  // namespace

TEST_CASE("pattern to Q") {
    CHECK(q_from_pattern(ohm_diagram(5)) == q_functions(ohm4()));
    CHECK(q_from_pattern(dual_ohm_diagram(5)) == q_functions(dual4()));
    CHECK(q_from_pattern(make_diagram({2})).get(1, 1) == frac(1, 2));
}

TEST_CASE("recursive and direct pattern solves agree") {
    for (std::size_t n = 2; n <= 6; ++n)
        for (const auto& d : enumerate_diagrams(n, false)) CHECK(q_from_pattern(d) == q_from_pattern_direct(d));
}

TEST_CASE("pattern solve positivity") {
    for (std::size_t n = 2; n <= 7; ++n)
        for (const auto& d : enumerate_diagrams(n, false)) {
            const PatternSolveState st = pattern_solve(d);
            for (std::size_t j = 1; j < n; ++j) CHECK(st.q[j] > 0);
            for (std::size_t j = 1; j < n; ++j) {
                const RVector& v = st.v[j];
                REQUIRE(v.size() == n - j);
                CHECK(v.back() == 1);
                for (const auto& x : v) CHECK(x > 0);
            }
        }
}

TEST_CASE("h_from_q round trip") {
    std::mt19937_64 rng(3);
    for (int rep = 0; rep < 50; ++rep) {
        const std::size_t n = 1 + rep % 7;
        HMatrix h(n);
        for (std::size_t k = 1; k < n; ++k) {
            for (std::size_t j = 1; j < k; ++j) h.at(k, j) = oracle::random_rational(rng);
            Rational d = 0;
            while (sgn(d) == 0) d = oracle::random_rational(rng);
            h.at(k, k) = d;
        }
        const QProfile q = q_functions(h);
        bool nonzero = true;
        for (std::size_t j = 1; j < n; ++j) nonzero = nonzero && sgn(q.get(n - j, j)) != 0;
        REQUIRE(nonzero);
        CHECK(h_from_q(q) == h);
    }
    QProfile z(3);
    CHECK_THROWS_AS(h_from_q(z), ZeroAntiDiagonalError);
}

TEST_CASE("table vertices") {
    CHECK(vertex_from_diagram(ohm_diagram(5)) == ohm4());
    CHECK(vertex_from_diagram(dual_ohm_diagram(5)) == dual4());
    CHECK(vertex_from_diagram(make_diagram({3, 3, 5, 5})) == rdo2());
    CHECK(h_from_q(q_from_pattern(ohm_diagram(5))) == ohm4());
    CHECK(h_from_q(q_from_pattern(make_diagram({3, 3, 5, 5}))) == rdo2());
    CHECK(vertex_from_diagram(make_diagram({2})) == oracle::hm({{"1/2"}}));
    CHECK(vertex_from_diagram(make_diagram({3, 3, 5, 5, 10, 7, 8, 9, 10})) == glued9());
}

TEST_CASE("vertex to diagram") {
    CHECK(diagram_from_vertex(ohm4()).parent == std::vector<std::size_t>{2, 3, 4, 5});
    CHECK(diagram_from_vertex(rdo2()).parent == std::vector<std::size_t>{3, 3, 5, 5});
    const HMatrix o3 = vertex_from_diagram(ohm_diagram(4));
    const HMatrix d3 = vertex_from_diagram(dual_ohm_diagram(4));
    HMatrix mid(4);
    for (std::size_t k = 1; k < 4; ++k)
        for (std::size_t j = 1; j <= k; ++j) mid.at(k, j) = (o3(k, j) + d3(k, j)) / 2;
    CHECK_THROWS_AS(diagram_from_vertex(mid), NotAVertexError);
}

TEST_CASE("bijection and pattern fidelity for N <= 7") {
    for (std::size_t n = 1; n <= 7; ++n)
        for (const auto& d : enumerate_diagrams(n, false)) {
            const HMatrix h = vertex_from_diagram(d);
            CHECK(check_invariance(h));
            CHECK(diagram_from_vertex(h) == d);
            const CertificateSet lam = certificates(h);
            for (std::size_t j = 1; j < n; ++j)
                for (std::size_t k = j + 1; k <= n; ++k) {
                    if (k == d.k(j)) CHECK(lam(k, j) > 0);
                    else CHECK(lam(k, j) == 0);
                }
            // every column carries a positive certificate and the sensitivity is at least N-1
            CHECK(rho(h) >= static_cast<long>(n) - 1);
        }
}
