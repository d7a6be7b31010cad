#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "vertexkit/algorithms.hpp"
#include "vertexkit/duality.hpp"
#include "vertexkit/gluing.hpp"
#include "vertexkit/qcert.hpp"
#include "vertexkit/vertex.hpp"

using namespace vk;

TEST_CASE("anti-transpose") {
    CHECK(anti_transpose(ohm_hmatrix(4)) == dual_ohm_hmatrix(4));
    CHECK(anti_transpose(oracle::hm({{"1/2"}})) == oracle::hm({{"1/2"}}));
    std::mt19937_64 rng(17);
    for (std::size_t n = 1; n <= 8; ++n) {
        HMatrix h(n);
        for (std::size_t k = 1; k < n; ++k)
            for (std::size_t j = 1; j <= k; ++j) h.at(k, j) = oracle::random_rational(rng);
        CHECK(anti_transpose(anti_transpose(h)) == h);
        for (std::size_t k = 1; k < n; ++k)
            for (std::size_t j = 1; j <= k; ++j) CHECK(anti_transpose(h)(k, j) == h(n - j, n - k));
    }
}

TEST_CASE("delta and reversal identities") {
    CHECK(delta_matrix(2) == RMatrix{{-1, 1}, {1, 0}});
    for (std::size_t n = 1; n <= 12; ++n) {
        const RMatrix D = delta_matrix(n);
        CHECK(D == D.transpose());
        RVector e(n, Rational(0));
        e[n - 1] = 1;
        CHECK(D * RVector(n, Rational(1)) == e);
        if (n <= 8) {
            const RMatrix T = reversal_matrix(n), J = ones_lower(n);
            CHECK(D * J * T == RMatrix::identity(n));
            CHECK(T * T == RMatrix::identity(n));
            CHECK(J * T == T * J.transpose());
        }
    }
}

TEST_CASE("dual lambda via inverse") {
    const HMatrix half = oracle::hm({{"1/2"}});
    CHECK(dual_lambda_via_inverse(half) == RMatrix{{-1, 1}, {1, -2}});
    const RMatrix dl = dual_lambda_via_inverse(ohm_hmatrix(4));
    CHECK(certificates_from_lambda(dl) == certificates(dual_ohm_hmatrix(4)));
    std::size_t crossing = 0;
    for (const auto& d : enumerate_diagrams(4, false)) {
        if (is_noncrossing(d)) continue;
        ++crossing;
        const RMatrix m = dual_lambda_via_inverse(vertex_from_diagram(d));
        bool neg = false;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) neg = neg || (i != j && m(i, j) < 0);
        CHECK(neg);
        CHECK_FALSE(is_optimal(anti_transpose(vertex_from_diagram(d))));
    }
    CHECK(crossing == 1);
}

TEST_CASE("reciprocal dual certificates") {
    const auto oc = dual_certificates_vertex(ohm_hmatrix(4));
    REQUIRE(oc.has_value());
    // OHM arcs carry j(j+1)/5, so the dual carries the reciprocals on the last row
    for (std::size_t j = 1; j <= 4; ++j) {
        const long jj = static_cast<long>(5 - j);
        CHECK((*oc)(5, j) == frac(5, jj * (jj + 1)));
    }
    CHECK(*oc == certificates(dual_ohm_hmatrix(4)));
    const auto h = dual_certificates_vertex(oracle::hm({{"1/2"}}));
    REQUIRE(h.has_value());
    CHECK((*h)(2, 1) == 1);
    for (const auto& d : enumerate_diagrams(4, false))
        if (!is_noncrossing(d)) CHECK_FALSE(dual_certificates_vertex(vertex_from_diagram(d)).has_value());
}

TEST_CASE("three routes agree on basic vertices") {
    for (std::size_t n = 1; n <= 7; ++n)
        for (const auto& d : enumerate_diagrams(n, true)) {
            const HMatrix h = vertex_from_diagram(d);
            const HMatrix ha = anti_transpose(h);
            const CertificateSet direct = certificates(ha);
            CHECK(certificates_from_lambda(dual_lambda_via_inverse(h)) == direct);
            const auto comb = dual_certificates_vertex(h);
            REQUIRE(comb.has_value());
            CHECK(*comb == direct);
            CHECK(diagram_from_vertex(ha) == dualize_basic_diagram(d));
            CHECK(dual_report(h).route_agreement);
            CHECK(dual_report(h).dual_optimal);
        }
}

TEST_CASE("crossing vertices lose optimality") {
    for (std::size_t n = 4; n <= 6; ++n)
        for (const auto& d : enumerate_diagrams(n, false)) {
            if (is_noncrossing(d)) continue;
            const HMatrix h = vertex_from_diagram(d);
            const RMatrix m = dual_lambda_via_inverse(h);
            bool neg = false;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) neg = neg || (i != j && m(i, j) < 0);
            CHECK(neg);
            const DualReport r = dual_report(h);
            CHECK_FALSE(r.dual_optimal);
            CHECK(check_invariance(r.dual_h));
        }
}

TEST_CASE("recursive diagram dualization") {
    CHECK(dualize_basic_diagram(ohm_diagram(5)) == dual_ohm_diagram(5));
    CHECK(dualize_basic_diagram(singleton_diagram()) == singleton_diagram());
    const ArcDiagram in = make_diagram({2, 3, 4, 10, 7, 7, 10, 9, 10});
    const ArcDiagram out = make_diagram({3, 3, 6, 5, 6, 10, 10, 10, 10});
    CHECK(dualize_basic_diagram(in) == out);
    CHECK(dualize_basic_diagram(in, true) == out);
    CHECK(diagram_from_vertex(anti_transpose(vertex_from_diagram(in))) == out);
    CHECK_THROWS_AS(dualize_basic_diagram(make_diagram({4, 5, 4, 8, 7, 7, 8})), CrossingDiagramError);
    for (std::size_t n = 1; n <= 9; ++n)
        for (const auto& d : enumerate_diagrams(n, true)) {
            const ArcDiagram a = dualize_basic_diagram(d);
            CHECK(dualize_basic_diagram(a) == d);
            CHECK(dualize_basic_diagram(d, true) == a);
        }
}

TEST_CASE("self-duality counts") {
    std::vector<std::size_t> p;
    for (std::size_t j = 1; j < 16; ++j) p.push_back(j + (j & (~j + 1)));
    CHECK(is_self_dual(make_diagram(p)));
    for (std::size_t n = 1; n <= 8; ++n) {
        std::size_t count = 0;
        for (const auto& d : enumerate_diagrams(n, false)) {
            const bool sd = is_self_dual(d);
            count += sd;
            if (sd) CHECK(anti_transpose(vertex_from_diagram(d)) == vertex_from_diagram(d));
        }
        if (n % 2) CHECK(count == 0);
        else CHECK(Rational(static_cast<unsigned long>(count)) == catalan(static_cast<long>(n / 2) - 1));
    }
}

TEST_CASE("combinatorial inverse") {
    const RMatrix nu = nu_combinatorial(oracle::hm({{"1/2"}}));
    CHECK(nu == RMatrix{{-2, -1}, {-1, -1}});
    for (std::size_t n = 1; n <= 5; ++n)
        for (const auto& d : enumerate_diagrams(n, false)) {
            const HMatrix h = vertex_from_diagram(d);
            const RMatrix c = nu_combinatorial(h);
            CHECK(c == invert(lambda_matrix(h)));
            for (std::size_t i = 0; i < n; ++i) {
                CHECK(c(i, n - 1) == -1);
                CHECK(c(n - 1, i) == -1);
            }
        }
}
