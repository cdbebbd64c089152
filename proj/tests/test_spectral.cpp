#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "bruno/spectral.hpp"

using namespace bruno;
using C = std::complex<double>;
using std::numbers::pi;

namespace {

// synthetic 1-periodic function with coefficients l^{-(1+eta)}: eta-Holder
Spectrum synthetic_spectrum(double eta, int l_max, double t0 = 0.0) {
    Spectrum s;
    s.t0 = t0;
    s.coeffs.resize(static_cast<std::size_t>(l_max) + 1);
    s.coeffs[0] = 0.0;
    for (int l = 1; l <= l_max; ++l)
        s.coeffs[static_cast<std::size_t>(l)] =
            std::pow(static_cast<double>(l), -(1.0 + eta)) * std::exp(-2.0 * pi * t0 * l);
    return s;
}

}  // namespace

TEST_CASE("fourier coefficients of simple inputs") {
    const int n = 1024;
    std::vector<C> constant(n, C(3.25, 0.0));
    auto s = fourier_coeffs(constant, 1e-4);
    CHECK(s.coeffs[0] == doctest::Approx(3.25).epsilon(1e-14));
    for (int l = 1; l < n / 2; ++l) CHECK(std::abs(s.coeffs[static_cast<std::size_t>(l)]) < 1e-12);
    CHECK(s.t0 == 1e-4);

    std::vector<C> mode(n);
    for (int j = 0; j < n; ++j) {
        const double th = 2.0 * pi * j / n;
        mode[static_cast<std::size_t>(j)] = C(std::cos(th), std::sin(th));
    }
    auto m = fourier_coeffs(mode, 0.0);
    CHECK(m.coeffs[1] == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(m.residual_imag < 1e-12);

    std::vector<C> bad(1000);
    CHECK_THROWS_AS((void)fourier_coeffs(bad, 0.0), std::domain_error);
    std::vector<C> small(512);
    CHECK_THROWS_AS((void)fourier_coeffs(small, 0.0), std::invalid_argument);
}

TEST_CASE("poisson sup-norm") {
    // single mode: sup = 2 pi e^{-2 pi t_eff}
    Spectrum s;
    s.t0 = 0.0;
    s.coeffs = {0.0, 1.0};
    const double t = 0.05;
    CHECK(poisson_deriv_supnorm(s, 1, t) ==
          doctest::Approx(2.0 * pi * std::exp(-2.0 * pi * t)).epsilon(1e-12));

    // r = 0 at large t: only the mean survives
    Spectrum m;
    m.t0 = 0.0;
    m.coeffs = {2.5, 1.0, 0.5};
    CHECK(poisson_deriv_supnorm(m, 0, 50.0) == doctest::Approx(2.5).epsilon(1e-10));

    // oversampling stability on a rough spectrum
    auto rough = synthetic_spectrum(0.3, 2047);
    const double a4 = poisson_deriv_supnorm(rough, 2, 1e-2, 4);
    const double a8 = poisson_deriv_supnorm(rough, 2, 1e-2, 8);
    CHECK(std::abs(a4 - a8) / a8 < 0.005);
}

TEST_CASE("kernel-height identity") {
    auto a = synthetic_spectrum(0.5, 4095, 1e-4);
    auto b = a;
    b.t0 = 0.0;
    for (double t : {1e-3, 1e-2, 1e-1})
        CHECK(poisson_deriv_supnorm(a, 3, t) == poisson_deriv_supnorm(b, 3, t + 1e-4));
}

TEST_CASE("clp on synthetic spectra") {
    auto s = synthetic_spectrum(0.5, 8191);
    auto ts = log_spaced(1e-3, 1e-1, 60);
    auto r2 = clp_estimate(s, 2, ts);
    CHECK(r2.eta == doctest::Approx(0.5).epsilon(0.04));
    auto r3 = clp_estimate(s, 3, ts);
    CHECK(r3.eta == doctest::Approx(0.5).epsilon(0.04));

    std::vector<double> few = {1e-3, 2e-3, 4e-3};
    CHECK_THROWS_AS((void)clp_estimate(s, 2, few), std::domain_error);
    CHECK_THROWS_AS((void)clp_estimate(s, 1, ts), std::invalid_argument);
}

TEST_CASE("dyadic blocks") {
    Spectrum s;
    s.t0 = 0.0;
    s.coeffs = {1.5, 0.0, 1.0, 0.0, 0.0};
    CHECK(dyadic_block_supnorm(s, 0, 1.25) == 1.5);
    // the mode l=2 lands in the unique M with A^{M-1} <= 2 < A^M
    int hits = 0;
    for (int m = 1; m <= dlp_max_block(s, 1.25); ++m) {
        const double v = dyadic_block_supnorm(s, m, 1.25);
        if (v > 0.0) {
            ++hits;
            CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
            CHECK(std::pow(1.25, m - 1) <= 2.0);
            CHECK(2.0 < std::pow(1.25, m));
        }
    }
    CHECK(hits == 1);
    CHECK_THROWS_AS((void)dyadic_block_supnorm(s, 30, 1.25), std::domain_error);
}

TEST_CASE("dlp on synthetic spectra") {
    auto s = synthetic_spectrum(0.5, 8191);
    const int mmax = dlp_max_block(s, 1.25);
    auto r = dlp_estimate(s, 1.25, mmax / 3 + 1, mmax);
    CHECK(r.eta == doctest::Approx(0.5).epsilon(0.06));

    // single-mode spectrum degenerates
    Spectrum mode;
    mode.t0 = 0.0;
    mode.coeffs.assign(2048, 0.0);
    mode.coeffs[1] = 1.0;
    CHECK_THROWS_AS((void)dlp_estimate(mode, 1.25, 1, dlp_max_block(mode, 1.25)),
                    std::domain_error);
}

TEST_CASE("deconvolution guard") {
    // at t0 = 1e-2 the amplification passes e above l = 1/(2 pi t0) ~ 16,
    // so every block beyond M = 12 is excluded and reported
    auto s = synthetic_spectrum(0.5, 8191, 1e-2);
    const int mmax = dlp_max_block(s, 1.25);
    auto r = dlp_estimate(s, 1.25, 1, mmax);
    CHECK_FALSE(r.excluded_blocks.empty());
    for (int m : r.used_blocks)
        CHECK(2.0 * pi * (std::ceil(std::pow(1.25, m)) - 1.0) * s.t0 <= 1.0);
    // a range made only of guarded blocks is rejected
    CHECK_THROWS_AS((void)dlp_estimate(s, 1.25, 20, mmax), std::domain_error);
    // blocks below the guard line survive untouched
    auto ok = synthetic_spectrum(0.5, 8191, 1e-5);
    auto r2 = dlp_estimate(ok, 1.25, dlp_max_block(ok, 1.25) / 3 + 1, dlp_max_block(ok, 1.25));
    CHECK(r2.eta == doctest::Approx(0.5).epsilon(0.06));
    CHECK(r2.excluded_blocks.empty());
}

TEST_CASE("estimator consistency across exponents") {
    for (double eta : {0.3, 0.5, 0.7}) {
        auto s = synthetic_spectrum(eta, 8191);
        auto ts = log_spaced(1e-3, 1e-1, 60);
        for (int r = 2; r <= 4; ++r)
            CHECK(std::abs(clp_estimate(s, r, ts).eta - eta) <= 0.03);
        const int mmax = dlp_max_block(s, 1.25);
        CHECK(std::abs(dlp_estimate(s, 1.25, mmax / 3 + 1, mmax).eta - eta) <= 0.03);
    }
}

TEST_CASE("linreg") {
    std::vector<double> xs = {1.0, 2.0, 3.0, 4.0};
    std::vector<double> ys = {3.0, 5.0, 7.0, 9.0};
    auto r = linreg(xs, ys);
    CHECK(r.slope == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(r.intercept == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.slope_stderr == doctest::Approx(0.0));
    CHECK(r.intercept_stderr == doctest::Approx(0.0));

    // slope within 3 standard errors on noisy data
    std::mt19937 rng(31337);
    std::normal_distribution<double> noise(0.0, 1.0);
    std::vector<double> nx(1000), ny(1000);
    for (int i = 0; i < 1000; ++i) {
        nx[static_cast<std::size_t>(i)] = i * 0.01;
        ny[static_cast<std::size_t>(i)] = nx[static_cast<std::size_t>(i)] + noise(rng);
    }
    auto nr = linreg(nx, ny);
    CHECK(std::abs(nr.slope - 1.0) <= 3.0 * nr.slope_stderr);

    std::vector<double> two = {1.0, 2.0};
    CHECK_THROWS_AS((void)linreg(two, two), std::domain_error);
    std::vector<double> cx = {1.0, 1.0, 1.0};
    CHECK_THROWS_AS((void)linreg(cx, xs), std::invalid_argument);
    std::vector<double> cy = {1.0, 2.0, 3.0};
    CHECK_THROWS_AS((void)linreg(cx, cy), std::domain_error);
}
