#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "bruno/monoid.hpp"
#include "bruno/nicf.hpp"

using namespace bruno;

namespace {

bool matches(const MonoidMatrix& g, long a, long b, long c, long d) {
    return g.a == a && g.b == b && g.c == c && g.d == d;
}

}  // namespace

TEST_CASE("matrix_T examples") {
    // 2/5 expands to [(0,+1),(2,+1),(2,+1)]; truncation gives 1/2
    auto g = matrix_T(Rational(2, 5));
    CHECK(matches(g, 1, 2, 2, 5));
    REQUIRE(g.word.has_value());
    CHECK(*g.word == GeneratorWord{{false, 2}, {false, 2}});
    CHECK(word_product(*g.word) == g);

    auto h = matrix_T(Rational(1, 2));
    CHECK(matches(h, 0, 1, 1, 2));  // = g(2)
    CHECK(*h.word == GeneratorWord{{false, 2}});

    // a fraction above 1/2 picks up the leading sigma
    auto k = matrix_T(Rational(2, 3));
    CHECK(matches(k, 1, 2, 1, 3));
    CHECK(word_product(*k.word) == k);

    CHECK_THROWS_AS((void)matrix_T(Rational(0, 1)), std::invalid_argument);
}

TEST_CASE("matrix_S examples") {
    auto [g, in_ms] = matrix_S(Rational(2, 5));
    CHECK(matches(g, 1, 2, 3, 5));
    CHECK(in_ms);  // expansion ends (2,+1) and 5 >= G*3
    REQUIRE(g.word.has_value());
    CHECK(g.word->back() == GeneratorLetter{true, 2});  // ends sigma g(2)
    CHECK(word_product(*g.word) == g);

    auto [h, h_in] = matrix_S(Rational(1, 3));
    CHECK(matches(h, 1, 1, 2, 3));  // p_S/q_S = 1/2
    CHECK_FALSE(h_in);              // 3 < G*2
    CHECK_FALSE(h.word.has_value());

    auto [u, u_in] = matrix_S(Rational(1, 2));
    CHECK(matches(u, 1, 1, 1, 2));
    CHECK(u_in);
}

TEST_CASE("sigma g(2) identity") {
    // g(1)g(1) = sigma g(2)
    GeneratorWord gg = {{false, 1}, {false, 1}};
    GeneratorWord sg = {{true, 2}};
    CHECK(word_product(gg) == word_product(sg));
}

TEST_CASE("membership inequalities") {
    CHECK(is_in_monoid(MonoidMatrix{1, 2, 3, 5, {}}));
    CHECK_FALSE(is_in_monoid(MonoidMatrix{0, 1, 1, 1, {}}));  // g(1): 1 < G
    CHECK_FALSE(is_in_monoid(MonoidMatrix{1, 0, 0, 1, {}}));  // identity: b = 0
    CHECK_FALSE(is_in_monoid(MonoidMatrix{2, 1, 3, 2, {}}));  // 2 < G*3
    CHECK_THROWS_AS((void)is_in_monoid(MonoidMatrix{1, 1, 1, 1, {}}), std::invalid_argument);
}

TEST_CASE("ends-(2,+1) iff q >= G q_S, q <= 100") {
    for (long q = 2; q <= 100; ++q) {
        for (long p = 1; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            auto [g, in_ms] = matrix_S(Rational(p, q), false);
            const auto e = nicf_expand_rational(Rational(p, q));
            CHECK(in_ms == (e.pairs.back().a == 2));
            // q >= G*q_S as exact integers: (2q - q_S)^2 >= 5 q_S^2
            const long qs = g.c;
            const long s = 2 * q - qs;
            CHECK(in_ms == (s > 0 && s * s >= 5 * qs * qs));
        }
    }
}

TEST_CASE("constructed matrices satisfy the characterization, q <= 100") {
    for (long q = 2; q <= 100; ++q) {
        for (long p = 1; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            auto t = matrix_T(Rational(p, q), false);
            CHECK(is_in_monoid(t));
            CHECK(std::abs(t.det()) == 1);
            auto [s, in_ms] = matrix_S(Rational(p, q), false);
            CHECK(std::abs(s.det()) == 1);
            CHECK(is_in_monoid(s) == in_ms);
        }
    }
}

TEST_CASE("word recovery") {
    CHECK(monoid_word(MonoidMatrix{1, 2, 2, 5, {}}) == GeneratorWord{{false, 2}, {false, 2}});
    CHECK(monoid_word(MonoidMatrix{1, 2, 3, 5, {}}) == GeneratorWord{{false, 2}, {true, 2}});
    CHECK(monoid_word(MonoidMatrix{0, 1, 1, 2, {}}) == GeneratorWord{{false, 2}});
    CHECK_THROWS_AS((void)monoid_word(MonoidMatrix{2, 1, 3, 2, {}}), std::domain_error);

    // every in-monoid matrix reproduces itself from its word (q <= 40)
    for (long q = 2; q <= 40; ++q) {
        for (long p = 1; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            auto t = matrix_T(Rational(p, q), false);
            CHECK(word_product(monoid_word(t)) == t);
            auto [s, in_ms] = matrix_S(Rational(p, q), false);
            if (in_ms) CHECK(word_product(monoid_word(s)) == s);
        }
    }
}

TEST_CASE("small-entry enumeration is reached by construction") {
    const long limit = 40;  // acceptance sweeps 60
    std::set<std::array<long, 4>> constructed;
    for (long q = 2; q <= limit; ++q) {
        for (long p = 1; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            auto t = matrix_T(Rational(p, q), false);
            constructed.insert({t.a, t.b, t.c, t.d});
            auto [s, in_ms] = matrix_S(Rational(p, q), false);
            if (in_ms) constructed.insert({s.a, s.b, s.c, s.d});
        }
    }
    long found = 0;
    for (long a = 0; a <= limit; ++a)
        for (long c = a; c <= limit; ++c)
            for (long b = 1; b <= limit; ++b)
                for (long d = b; d <= limit; ++d) {
                    const long det = a * d - b * c;
                    if (det != 1 && det != -1) continue;
                    const long s = 2 * d - c;
                    if (c > 0 && !(s > 0 && s * s >= 5 * c * c)) continue;
                    ++found;
                    CHECK(constructed.count({a, b, c, d}) == 1);
                }
    CHECK(found == static_cast<long>(constructed.size()));
}
