#pragma once

#include <complex>
#include <span>
#include <vector>

#include "bruno/dynamics.hpp"

namespace bruno {

/// One-sided real Fourier coefficients h_l, l = 0..l_max, of a function
/// sampled on a uniform grid at height t0. The imaginary parts discarded
/// by the real projection are recorded in residual_imag.
struct Spectrum {
    double t0 = 0.0;
    std::vector<double> coeffs;
    double residual_imag = 0.0;

    int l_max() const { return static_cast<int>(coeffs.size()) - 1; }
};

struct RegressionResult {
    double slope = 0.0;
    double intercept = 0.0;
    double slope_stderr = 0.0;
    double intercept_stderr = 0.0;
};

/// Least squares fit y = intercept + slope x with standard deviation
/// errors. Requires >= 3 points with non-constant x ("degenerate").
RegressionResult linreg(std::span<const double> xs, std::span<const double> ys);

/// Discrete Fourier transform of the samples (power of two, >= 1024),
/// one-sided coefficients l = 0..n/2-1, real projection.
Spectrum fourier_coeffs(std::span<const std::complex<double>> samples, double t0);
Spectrum fourier_coeffs(std::span<const HSample> samples);

/// Sup over an oversampled grid (>= 4x) of the r-th t-derivative of the
/// Poisson extension, sum_l (-2 pi l)^r e^{-2 pi t_eff l} h_l e^{2 pi i l x},
/// with the sampling height folded into t_eff = t + t0.
double poisson_deriv_supnorm(const Spectrum& s, int r, double t, int oversample = 4);

struct ClpResult {
    double eta = 0.0;
    double eta_stderr = 0.0;
    RegressionResult fit;
};

/// Continuous Littlewood-Paley estimate: regression of log sup-norm
/// against log t_eff over the given t-grid; eta = r + slope.
/// Requires r >= 2, at least 10 t-values, min(t) >= 10 t0.
ClpResult clp_estimate(const Spectrum& s, int r, std::span<const double> t_values);

/// Sup-norm of the dyadic block A^{M-1} <= l < A^M (M = 0: |h_0|), with
/// the coefficients deconvolved to the boundary by e^{2 pi l t0}.
double dyadic_block_supnorm(const Spectrum& s, int M, double a_base, int oversample = 4);

struct DlpResult {
    double eta = 0.0;
    double c = 0.0;
    double eta_stderr = 0.0;
    RegressionResult fit;
    std::vector<int> used_blocks;
    std::vector<int> excluded_blocks;  // empty blocks or deconvolution guard 2 pi l t0 > 1
};

/// Discrete Littlewood-Paley estimate over blocks M in [m_lo, m_hi]:
/// regression log_A ||L_M||_inf = C - eta M. Blocks failing the
/// amplification guard or with no coefficients are excluded; at least
/// 8 usable blocks are required ("insufficient-blocks").
DlpResult dlp_estimate(const Spectrum& s, double a_base, int m_lo, int m_hi, int oversample = 4);

/// Largest M with a_base^M <= l_max.
int dlp_max_block(const Spectrum& s, double a_base);

std::vector<double> log_spaced(double lo, double hi, int n);

}  // namespace bruno
