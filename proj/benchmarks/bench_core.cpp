#include <benchmark/benchmark.h>

#include <complex>
#include <random>

#include "bruno/bruno_complex.hpp"
#include "bruno/dynamics.hpp"
#include "bruno/nicf.hpp"
#include "bruno/special_functions.hpp"
#include "bruno/spectral.hpp"

using namespace bruno;
using C = std::complex<double>;

namespace {

void BM_Dilog(benchmark::State& state) {
    std::mt19937 rng(1);
    std::uniform_real_distribution<double> re(-3.0, 0.49), im(0.01, 3.0);
    C z(re(rng), im(rng));
    for (auto _ : state) {
        benchmark::DoNotOptimize(dilog(z));
        z += C(1e-9, 1e-9);
    }
}
BENCHMARK(BM_Dilog);

void BM_PhiHalf(benchmark::State& state) {
    C z(0.3, 0.7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(phi_half(z));
        z += C(1e-9, 1e-9);
    }
}
BENCHMARK(BM_PhiHalf);

void BM_NicfExpand(benchmark::State& state) {
    const Rational r(377, 987);
    for (auto _ : state) benchmark::DoNotOptimize(nicf_expand_rational(r));
}
BENCHMARK(BM_NicfExpand);

void BM_BrunoRealGolden(benchmark::State& state) {
    const double x = 2.0 - (std::sqrt(5.0) + 1.0) / 2.0;
    for (auto _ : state) benchmark::DoNotOptimize(bruno_real(x));
}
BENCHMARK(BM_BrunoRealGolden);

void BM_BuildTable(benchmark::State& state) {
    const CutoffConfig cfg{static_cast<int>(state.range(0)), 40, 20, 20};
    for (auto _ : state) benchmark::DoNotOptimize(build_table(cfg, 1));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildTable)->Arg(41)->Arg(101)->Complexity();

void BM_BrunoPoint(benchmark::State& state) {
    const CutoffConfig cfg{static_cast<int>(state.range(0)), 40, 20, 20};
    static BrunoTable table101 = build_table(CutoffConfig{101, 40, 20, 20}, 1);
    C z(0.3341, 1e-4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(bruno_complex(z, table101, cfg));
        z += C(1e-7, 0.0);
    }
}
BENCHMARK(BM_BrunoPoint)->Arg(41)->Arg(101);

void BM_YoccozU(benchmark::State& state) {
    const double t = std::pow(10.0, -static_cast<double>(state.range(0)));
    const double radius = std::exp(-2.0 * std::numbers::pi * t);
    const IterationBudget budget;
    double x = 0.333;
    for (auto _ : state) {
        const double th = 2.0 * std::numbers::pi * x;
        benchmark::DoNotOptimize(
            yoccoz_u(C(radius * std::cos(th), radius * std::sin(th)), budget));
        x += 1e-5;
    }
}
BENCHMARK(BM_YoccozU)->Arg(3)->Arg(4);

void BM_FourierCoeffs(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::vector<C> samples(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        const double th = 2.0 * std::numbers::pi * j / n;
        samples[static_cast<std::size_t>(j)] = C(std::cos(th), std::sin(3.0 * th));
    }
    for (auto _ : state)
        benchmark::DoNotOptimize(fourier_coeffs(samples, 1e-5));
}
BENCHMARK(BM_FourierCoeffs)->Arg(8192)->Arg(16384);

void BM_PoissonSupnorm(benchmark::State& state) {
    Spectrum s;
    s.t0 = 1e-5;
    s.coeffs.resize(4096);
    for (std::size_t l = 1; l < s.coeffs.size(); ++l)
        s.coeffs[l] = std::pow(static_cast<double>(l), -1.5);
    for (auto _ : state) benchmark::DoNotOptimize(poisson_deriv_supnorm(s, 3, 1e-2));
}
BENCHMARK(BM_PoissonSupnorm);

}  // namespace

BENCHMARK_MAIN();
