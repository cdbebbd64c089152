#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "bruno/bruno_complex.hpp"
#include "bruno/nicf.hpp"
#include "bruno/spectral.hpp"

using namespace bruno;
using C = std::complex<double>;

namespace {

const double kGolden = (std::sqrt(5.0) + 1.0) / 2.0;

const BrunoTable& table41() {
    static BrunoTable t = build_table(CutoffConfig{41, 80, 20, 20});
    return t;
}

const BrunoTable& table101() {
    static BrunoTable t = build_table(CutoffConfig{101, 80, 20, 20});
    return t;
}

}  // namespace

TEST_CASE("table contents at small orders") {
    auto t2 = build_table(CutoffConfig{2, 4, 2, 2});
    REQUIRE(t2.entries().size() == 2);  // 1/2 with both matrices
    const auto& gt = t2.entries()[0];
    CHECK((gt.pstar == 0 && gt.p == 1 && gt.qstar == 1 && gt.q == 2));
    CHECK_FALSE(gt.type_s);
    const auto& gs = t2.entries()[1];
    CHECK((gs.pstar == 1 && gs.p == 1 && gs.qstar == 1 && gs.q == 2));
    CHECK(gs.type_s);

    auto t5 = build_table(CutoffConfig{5, 4, 2, 2});
    int fractions = 0, s_count = 0;
    for (const auto& e : t5.entries()) {
        if (!e.type_s) ++fractions;
        else ++s_count;
        if (e.p == 2 && e.q == 5 && e.type_s) CHECK((e.pstar == 1 && e.qstar == 3));
    }
    CHECK(fractions == 9);  // |F_5| - 2
    bool s_for_third = false;
    for (const auto& e : t5.entries())
        if (e.p == 1 && e.q == 3 && e.type_s) s_for_third = true;
    CHECK_FALSE(s_for_third);  // 1/3 does not end with (2,+1)
}

TEST_CASE("cross-implementation reference values") {
    // frozen from an independent prototype of the same truncation
    const CutoffConfig cfg{41, 40, 20, 20};
    const struct {
        double x, t, re, im;
    } refs[] = {
        {0.3, 1e-2, -3.2114632050052255e-01, 1.8274676272843122e+00},
        {0.125, 1e-3, -9.1920447002982919e-01, 2.4596936241351370e+00},
        {0.45, 1e-4, 1.9207033699721560e-01, 1.7122290005919738e+00},
        {2.0 - kGolden, 1e-5, -3.3167549902215299e-01, 1.5460500416994483e+00},
    };
    // tolerance set by the prototype's dilog backend, not by this library
    for (const auto& r : refs) {
        const C v = bruno_complex(C(r.x, r.t), table41(), cfg);
        CHECK(std::abs(v - C(r.re, r.im)) < 5e-9);
    }
}

TEST_CASE("odd real part on the imaginary axis") {
    const CutoffConfig cfg{41, 40, 20, 20};
    for (double t : {1e-2, 1e-3}) {
        CHECK(std::abs(bruno_complex(C(0.0, t), table41(), cfg).real()) < 1e-13);
    }
}

TEST_CASE("periodicity is exact at representable shifts") {
    const CutoffConfig cfg{41, 40, 20, 20};
    for (double x : {0.25, 0.375, 0.125}) {
        const C a = bruno_complex(C(x, 1e-3), table41(), cfg);
        const C b = bruno_complex(C(x + 1.0, 1e-3), table41(), cfg);
        CHECK(a == b);
    }
}

TEST_CASE("parity of the unreduced sum") {
    const CutoffConfig cfg41{41, 40, 20, 20};
    const CutoffConfig cfg101{101, 80, 20, 20};
    for (double x : {0.31, 0.11, 0.47}) {
        const C plus = bruno_complex_raw(C(x, 1e-3), table41(), cfg41);
        const C minus = bruno_complex_raw(C(-x, 1e-3), table41(), cfg41);
        CHECK(std::abs(minus + std::conj(plus)) < 1e-12);
    }
    const C plus = bruno_complex_raw(C(0.31, 1e-3), table101(), cfg101);
    const C minus = bruno_complex_raw(C(-0.31, 1e-3), table101(), cfg101);
    CHECK(std::abs(minus + std::conj(plus)) < 1e-12);
}

TEST_CASE("boundary value approaches the real Bruno function") {
    const CutoffConfig cfg{101, 80, 20, 20};
    const double silver = std::sqrt(2.0) - 1.0;
    const double gold = 2.0 - kGolden;
    CHECK(std::abs(bruno_complex(C(silver, 1e-5), table101(), cfg).imag() - bruno_real(silver)) <
          1e-2);
    CHECK(std::abs(bruno_complex(C(silver, 1e-7), table101(), cfg).imag() - bruno_real(silver)) <
          1e-2);
    CHECK(std::abs(bruno_complex(C(gold, 1e-5), table101(), cfg).imag() - bruno_real(gold)) < 1e-2);
    // smoothing decreases the defect from t = 1e-3 to 1e-5
    const double e3 = std::abs(bruno_complex(C(silver, 1e-3), table101(), cfg).imag() -
                               bruno_real(silver));
    const double e5 = std::abs(bruno_complex(C(silver, 1e-5), table101(), cfg).imag() -
                               bruno_real(silver));
    CHECK(e5 < e3);
}

TEST_CASE("jumps of the real part") {
    const CutoffConfig cfg{101, 80, 20, 20};
    const double t = 1e-7, delta = 1e-4;
    CHECK(std::abs(jump_at(Rational(1, 2), t, delta, table101(), cfg) - std::numbers::pi / 2.0) <
          1e-2);
    CHECK(std::abs(jump_at(Rational(2, 5), t, delta, table101(), cfg) - std::numbers::pi / 5.0) <
          1e-2);
    CHECK(std::abs(jump_at(Rational(0, 1), t, delta, table101(), cfg) - std::numbers::pi) < 1e-2);
    CHECK_THROWS_AS((void)jump_at(Rational(1, 2), 0.0, delta, table101(), cfg),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)jump_at(Rational(1, 2), t, 0.2, table101(), cfg), std::invalid_argument);
}

TEST_CASE("grid evaluation") {
    const CutoffConfig cfg{41, 40, 20, 20};
    auto rows = bruno_grid(1e-3, 0.0, 0.5, 51, table41(), cfg, 2);
    REQUIRE(rows.size() == 51);
    CHECK(rows.front().x == 0.0);
    CHECK(rows.back().x == 0.5);
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].x > rows[i - 1].x);
    // reproducibility with different thread counts
    auto rows1 = bruno_grid(1e-3, 0.0, 0.5, 51, table41(), cfg, 1);
    for (std::size_t i = 0; i < rows.size(); ++i) CHECK(rows[i].b == rows1[i].b);

    auto two = bruno_grid(1e-2, 0.1, 0.2, 2, table41(), cfg);
    REQUIRE(two.size() == 2);

    // harmonic smoothing: sup |Im| shrinks as t grows
    auto lo = bruno_grid(1e-4, 0.0, 0.5, 101, table41(), cfg);
    auto hi = bruno_grid(1e-2, 0.0, 0.5, 101, table41(), cfg);
    double sup_lo = 0.0, sup_hi = 0.0;
    for (std::size_t i = 0; i < lo.size(); ++i) {
        sup_lo = std::max(sup_lo, std::abs(lo[i].b.imag()));
        sup_hi = std::max(sup_hi, std::abs(hi[i].b.imag()));
    }
    CHECK(sup_hi < sup_lo);

    CHECK_THROWS_AS((void)bruno_grid(0.0, 0.0, 0.5, 10, table41(), cfg), std::invalid_argument);
    CHECK_THROWS_AS((void)bruno_complex(C(0.3, -1e-3), table41(), cfg), std::domain_error);
}

TEST_CASE("cutoff study decreases in every parameter") {
    const CutoffConfig ref{41, 40, 20, 20};
    std::vector<C> grid;
    for (int i = 0; i < 40; ++i) grid.emplace_back(0.0125 * i, 1e-4);
    auto nm = cutoff_study(CutoffParam::n_max, {11, 21, 31}, ref, grid, table41(), 2);
    CHECK(nm[0] > nm[1]);
    CHECK(nm[1] > nm[2]);
    auto k1 = cutoff_study(CutoffParam::k1, {20, 30}, ref, grid, table41(), 2);
    CHECK(k1[0] > k1[1]);
    auto k2 = cutoff_study(CutoffParam::k2, {10, 15}, ref, grid, table41(), 2);
    CHECK(k2[0] > k2[1]);
}

TEST_CASE("fourier structure of the truncated sum") {
    // One-sidedness and pure imaginarity of the coefficients hold up to
    // the truncation defect; at these cut-offs that is ~1e-3 relative for
    // the negative modes and ~1e-5 for the real parts.
    const CutoffConfig cfg{101, 80, 20, 20};
    const int n = 1024;
    std::vector<C> samples(n);
    for (int j = 0; j < n; ++j)
        samples[static_cast<std::size_t>(j)] =
            bruno_complex(C(static_cast<double>(j) / n, 1e-2), table101(), cfg);
    // naive two-sided DFT on 1024 points is fine here
    std::vector<C> coef(static_cast<std::size_t>(n));
    for (int l = 0; l < n; ++l) {
        C acc(0.0, 0.0);
        for (int j = 0; j < n; ++j) {
            const double th = -2.0 * std::numbers::pi * l * j / n;
            acc += samples[static_cast<std::size_t>(j)] * C(std::cos(th), std::sin(th));
        }
        coef[static_cast<std::size_t>(l)] = acc / static_cast<double>(n);
    }
    double peak = 0.0;
    for (const C& c : coef) peak = std::max(peak, std::abs(c));
    double neg = 0.0, realpart = 0.0;
    for (int l = n / 2 + 1; l < n; ++l) neg = std::max(neg, std::abs(coef[static_cast<std::size_t>(l)]));
    for (int l = 0; l < n / 2; ++l)
        realpart = std::max(realpart, std::abs(coef[static_cast<std::size_t>(l)].real()));
    CHECK(neg / peak < 1e-2);
    CHECK(realpart / peak < 1e-4);
}
