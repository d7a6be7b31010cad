#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "vertexkit/core.hpp"

using namespace vk;

TEST_CASE("binomial values") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(10, 0) == 1);
    CHECK(binomial(5, 3) == 10);
    CHECK(frac(1, 5) * binomial(5, 3) == 2);
    CHECK(binomial(3, -1) == 0);
    CHECK(binomial(3, 4) == 0);
    for (long n = 0; n <= 20; ++n)
        for (long k = -1; k <= n + 1; ++k) CHECK(binomial(n, k) == oracle::choose(n, k));
}

TEST_CASE("catalan and factorial") {
    const long cat[] = {1, 1, 2, 5, 14, 42, 132, 429};
    for (long m = 0; m < 8; ++m) CHECK(catalan(m) == cat[m]);
    CHECK(factorial(6) == 720);
    CHECK(factorial(0) == 1);
}

TEST_CASE("rational text round trip") {
    CHECK(to_string(frac(6, -4)) == "-3/2");
    CHECK(to_string(frac(4, 2)) == "2");
    CHECK(parse_rational("-3/2") == frac(-3, 2));
    CHECK(parse_rational("10/4") == frac(5, 2));
    CHECK(is_canonical(parse_rational("10/4")));
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("x"));
    CHECK_THROWS(frac(1, 0));
}

TEST_CASE("solve_linear") {
    CHECK(solve_linear(RMatrix::identity(3), {1, 2, 3}) == RVector{1, 2, 3});
    RMatrix a{{1, -1}, {-2, 3}};
    CHECK(solve_linear(a, {1, 0}) == RVector{3, 2});
    CHECK_THROWS_AS(solve_linear(RMatrix{{0, 1}, {0, 0}}, {1, 1}), SingularMatrixError);
    CHECK_THROWS_AS(solve_linear(a, {1, 2, 3}), DimensionError);
}

TEST_CASE("invert") {
    CHECK(invert(RMatrix::identity(2)) == RMatrix::identity(2));
    CHECK(invert(RMatrix{{1, -1}, {-2, 3}}) == RMatrix{{3, 1}, {2, 1}});
    CHECK(invert(RMatrix{{-1, 1}, {1, -2}}) == RMatrix{{-2, -1}, {-1, -1}});
    CHECK_THROWS_AS(invert(RMatrix{{1, 2}, {2, 4}}), SingularMatrixError);
}

TEST_CASE("random integer matrices invert exactly") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> dist(-5, 5);
    int done = 0;
    while (done < 100) {
        const std::size_t n = 1 + done % 8;
        RMatrix a(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a(i, j) = dist(rng);
        if (determinant(a) == 0) continue;
        const RMatrix inv = invert(a);
        CHECK(inv * a == RMatrix::identity(n));
        CHECK(a * inv == RMatrix::identity(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) CHECK(is_canonical(inv(i, j)));
        ++done;
    }
}

TEST_CASE("pascal matrices") {
    CHECK(pascal_S(1) == RMatrix{{1}});
    CHECK(pascal_S(2) == RMatrix{{1, -1}, {-2, 3}});
    CHECK(pascal_R(2) == RMatrix{{1, -1}, {1, -2}, {0, -1}});
    const RVector c3{1, 3, 3};
    CHECK(pascal_R(3) * c3 == RVector{1, 4, 6, 3});
}

TEST_CASE("pascal identities for r <= 8") {
    for (std::size_t r = 1; r <= 8; ++r) {
        const long rl = static_cast<long>(r);
        const RMatrix s = pascal_S(r);
        // every leading principal minor is one
        for (std::size_t k = 1; k <= r; ++k) {
            RMatrix lead(k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) lead(i, j) = s(i, j);
            CHECK(determinant(lead) == 1);
        }
        const RMatrix inv = invert(s);
        for (std::size_t b = 0; b < r; ++b) CHECK(inv(r - 1, b) == oracle::choose(rl, static_cast<long>(b) + 1));
        for (std::size_t a = 0; a < r; ++a) CHECK(inv(a, r - 1) == oracle::choose(rl - 1, static_cast<long>(a)));

        const RMatrix R = pascal_R(r);
        const RMatrix p = R.transpose() * R;
        CHECK(p == pascal_P(r));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j)
                CHECK(p(i, j) == (((i + j) % 2) ? -1 : 1) * oracle::choose(static_cast<long>(i + j + 2), static_cast<long>(i + 1)));
        // leading minors of P are positive
        for (std::size_t k = 1; k <= r; ++k) {
            RMatrix lead(k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) lead(i, j) = p(i, j);
            CHECK(determinant(lead) > 0);
        }
        // R_r (C(r,0..r-1)) = (-1)^{r+1} (d - e)
        RVector c(r);
        for (std::size_t i = 0; i < r; ++i) c[i] = oracle::choose(rl, static_cast<long>(i));
        RVector expect(r + 1);
        for (std::size_t i = 0; i <= r; ++i) expect[i] = oracle::choose(rl + 1, static_cast<long>(i));
        expect[r] -= 1;
        if (r % 2 == 0) expect = Rational(-1) * expect;
        CHECK(R * c == expect);
    }
}

TEST_CASE("exact size cap") {
    const std::size_t old = max_exact_n();
    set_max_exact_n(10);
    CHECK_THROWS_AS(require_exact_n(11, "test"), CapExceededError);
    CHECK_NOTHROW(require_exact_n(10, "test"));
    set_max_exact_n(old);
}
