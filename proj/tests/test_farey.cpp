#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "bruno/farey.hpp"

using namespace bruno;

TEST_CASE("small orders") {
    auto f1 = farey_series(1);
    REQUIRE(f1.elements.size() == 2);
    CHECK(f1.elements.front() == Rational(0, 1));
    CHECK(f1.elements.back() == Rational(1, 1));

    auto f2 = farey_brute(2);
    REQUIRE(f2.elements.size() == 3);
    CHECK(f2.elements[1] == Rational(1, 2));

    auto f5 = farey_series(5);
    REQUIRE(f5.elements.size() == 11);
    CHECK(f5.elements[0] == Rational(0, 1));
    CHECK(f5.elements[1] == Rational(1, 5));
    CHECK(f5.elements[2] == Rational(1, 4));
    CHECK(f5.elements[5] == Rational(1, 2));
}

TEST_CASE("cardinality is 1 + sum phi(k)") {
    long expect = 1;
    for (long k = 1; k <= 30; ++k) {
        long phi = 0;
        for (long j = 1; j <= k; ++j)
            if (std::gcd(j, k) == 1) ++phi;
        expect += phi;
        CHECK(farey_series(k).elements.size() == static_cast<std::size_t>(expect));
    }
}

TEST_CASE("series equals brute force") {
    for (long n : {1L, 2L, 3L, 7L, 50L, 300L}) {
        auto a = farey_series(n);
        auto b = farey_brute(n);
        REQUIRE(a.elements.size() == b.elements.size());
        for (std::size_t i = 0; i < a.elements.size(); ++i) CHECK(a.elements[i] == b.elements[i]);
    }
}

TEST_CASE("unimodularity and mediant") {
    for (long n = 1; n <= 120; ++n) {
        auto f = farey_series(n);
        for (std::size_t i = 0; i + 1 < f.elements.size(); ++i) {
            const auto& a = f.elements[i];
            const auto& b = f.elements[i + 1];
            CHECK(a.den() * b.num() - b.den() * a.num() == 1);
        }
        for (std::size_t i = 1; i + 1 < f.elements.size(); ++i) {
            const auto& prev = f.elements[i - 1];
            const auto& mid = f.elements[i];
            const auto& next = f.elements[i + 1];
            CHECK(mid == Rational(prev.num() + next.num(), prev.den() + next.den()));
        }
    }
}

TEST_CASE("neighbors examples") {
    auto [lo, hi] = farey_neighbors(Rational(2, 5));
    CHECK(lo == Rational(1, 3));
    CHECK(hi == Rational(1, 2));
    // mediant of the neighbors reproduces the fraction
    CHECK(Rational(lo.num() + hi.num(), lo.den() + hi.den()) == Rational(2, 5));

    auto [l2, h2] = farey_neighbors(Rational(1, 2));
    CHECK(l2 == Rational(0, 1));
    CHECK(h2 == Rational(1, 1));

    CHECK_THROWS_AS((void)farey_neighbors(Rational(0, 1)), std::invalid_argument);
    CHECK_THROWS_AS((void)farey_neighbors(Rational(1, 1)), std::invalid_argument);
}

TEST_CASE("neighbors against brute force up to q = 60") {
    for (long q = 2; q <= 60; ++q) {
        auto f = farey_brute(q);
        for (std::size_t i = 1; i + 1 < f.elements.size(); ++i) {
            if (f.elements[i].den() != q) continue;  // only elements new in F_q
            auto [lo, hi] = farey_neighbors(f.elements[i]);
            CHECK(lo == f.elements[i - 1]);
            CHECK(hi == f.elements[i + 1]);
        }
    }
}

TEST_CASE("neighbors of arbitrary reduced fractions") {
    // for every reduced p/q the pair is the F_q neighborhood
    auto f = farey_brute(37);
    for (std::size_t i = 1; i + 1 < f.elements.size(); ++i) {
        auto [lo, hi] = farey_neighbors(f.elements[i]);
        const auto pos = static_cast<std::size_t>(
            std::lower_bound(f.elements.begin(), f.elements.end(), f.elements[i],
                             [](const Rational& a, const Rational& b) { return a < b; }) -
            f.elements.begin());
        // lo/hi are neighbors in F_q with q = den; within F_37 they bracket
        CHECK(lo < f.elements[pos]);
        CHECK(f.elements[pos] < hi);
    }
}
