#include "bruno/spectral.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace bruno {

namespace {

using C = std::complex<double>;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::mutex& fftw_mutex() {
    static std::mutex m;
    return m;
}

// In-place DFT, sign -1 forward / +1 backward, unnormalized.
// FFTW plan creation is serialized; execution runs on the caller's buffer.
void fft(std::vector<C>& data, int sign) {
    const int n = static_cast<int>(data.size());
    auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(fftw_mutex());
        plan = fftw_plan_dft_1d(n, ptr, ptr, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
    }
    fftw_execute_dft(plan, ptr, ptr);
    {
        std::lock_guard<std::mutex> lock(fftw_mutex());
        fftw_destroy_plan(plan);
    }
}

bool is_power_of_two(std::size_t n) { return n > 0 && (n & (n - 1)) == 0; }

// sup |sum_l c_l e^{2 pi i l x}| over an oversampled uniform grid
double one_sided_supnorm(const std::vector<C>& coeffs, int oversample) {
    std::size_t m = 16;
    const std::size_t want = coeffs.size() * static_cast<std::size_t>(std::max(oversample, 1));
    while (m < want) m *= 2;
    std::vector<C> buf(m, C(0.0, 0.0));
    std::copy(coeffs.begin(), coeffs.end(), buf.begin());
    fft(buf, +1);
    double sup = 0.0;
    for (const C& v : buf) sup = std::max(sup, std::abs(v));
    return sup;
}

}  // namespace

RegressionResult linreg(std::span<const double> xs, std::span<const double> ys) {
    const std::size_t n = xs.size();
    if (n != ys.size()) throw std::invalid_argument("linreg: size mismatch");
    if (n < 3) throw std::domain_error("linreg: degenerate (need >= 3 points)");
    const double nn = static_cast<double>(n);
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= nn;
    my /= nn;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    if (sxx == 0.0) throw std::domain_error("linreg: degenerate (constant x)");
    RegressionResult r;
    r.slope = sxy / sxx;
    r.intercept = my - r.slope * mx;
    double ssr = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double e = ys[i] - (r.intercept + r.slope * xs[i]);
        ssr += e * e;
    }
    const double sigma2 = ssr / (nn - 2.0);
    r.slope_stderr = std::sqrt(sigma2 / sxx);
    r.intercept_stderr = std::sqrt(sigma2 * (1.0 / nn + mx * mx / sxx));
    return r;
}

Spectrum fourier_coeffs(std::span<const std::complex<double>> samples, double t0) {
    const std::size_t n = samples.size();
    if (!is_power_of_two(n)) throw std::domain_error("fourier_coeffs: not-power-of-two");
    if (n < 1024) throw std::invalid_argument("fourier_coeffs: need >= 1024 points");
    std::vector<C> buf(samples.begin(), samples.end());
    fft(buf, -1);
    Spectrum s;
    s.t0 = t0;
    s.coeffs.resize(n / 2);
    double residual = 0.0;
    const double scale = 1.0 / static_cast<double>(n);
    for (std::size_t l = 0; l < n / 2; ++l) {
        const C v = buf[l] * scale;
        s.coeffs[l] = v.real();
        residual = std::max(residual, std::abs(v.imag()));
    }
    s.residual_imag = residual;
    return s;
}

Spectrum fourier_coeffs(std::span<const HSample> samples) {
    std::vector<C> v(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) v[i] = samples[i].value;
    const double t0 = samples.empty() ? 0.0 : samples[0].t;
    return fourier_coeffs(std::span<const C>(v), t0);
}

double poisson_deriv_supnorm(const Spectrum& s, int r, double t, int oversample) {
    if (r < 0) throw std::invalid_argument("poisson_deriv_supnorm: r < 0");
    if (!(t > 0.0)) throw std::invalid_argument("poisson_deriv_supnorm: t <= 0");
    const double t_eff = t + s.t0;
    std::vector<C> c(s.coeffs.size());
    for (std::size_t l = 0; l < c.size(); ++l) {
        const double ld = static_cast<double>(l);
        c[l] = C(std::pow(-kTwoPi * ld, r) * std::exp(-kTwoPi * t_eff * ld) * s.coeffs[l], 0.0);
    }
    return one_sided_supnorm(c, oversample);
}

ClpResult clp_estimate(const Spectrum& s, int r, std::span<const double> t_values) {
    if (r < 2) throw std::invalid_argument("clp_estimate: r < 2");
    if (t_values.size() < 10) throw std::domain_error("clp_estimate: insufficient-points");
    for (double t : t_values)
        if (!(t >= 10.0 * s.t0)) throw std::invalid_argument("clp_estimate: t below 10*t0");

    std::vector<double> xs(t_values.size()), ys(t_values.size());
    for (std::size_t i = 0; i < t_values.size(); ++i) {
        xs[i] = std::log(t_values[i] + s.t0);
        ys[i] = std::log(poisson_deriv_supnorm(s, r, t_values[i]));
    }
    ClpResult out;
    out.fit = linreg(xs, ys);
    out.eta = static_cast<double>(r) + out.fit.slope;
    out.eta_stderr = out.fit.slope_stderr;
    return out;
}

double dyadic_block_supnorm(const Spectrum& s, int M, double a_base, int oversample) {
    if (M < 0) throw std::invalid_argument("dyadic_block_supnorm: M < 0");
    if (!(a_base > 1.0)) throw std::invalid_argument("dyadic_block_supnorm: A <= 1");
    if (M == 0) return std::abs(s.coeffs.empty() ? 0.0 : s.coeffs[0]);
    if (std::pow(a_base, M) > static_cast<double>(s.l_max()))
        throw std::domain_error("dyadic_block_supnorm: block-exceeds-spectrum");
    const double lo = std::pow(a_base, M - 1);
    const double hi = std::pow(a_base, M);
    const int l_lo = static_cast<int>(std::ceil(lo));
    const int l_hi = static_cast<int>(std::ceil(hi)) - 1;  // l < A^M
    if (l_lo > l_hi) return 0.0;
    std::vector<C> c(static_cast<std::size_t>(l_hi) + 1, C(0.0, 0.0));
    for (int l = l_lo; l <= l_hi; ++l)
        c[static_cast<std::size_t>(l)] =
            C(s.coeffs[static_cast<std::size_t>(l)] * std::exp(kTwoPi * l * s.t0), 0.0);
    return one_sided_supnorm(c, oversample);
}

int dlp_max_block(const Spectrum& s, double a_base) {
    return static_cast<int>(std::floor(std::log(static_cast<double>(s.l_max())) / std::log(a_base)));
}

DlpResult dlp_estimate(const Spectrum& s, double a_base, int m_lo, int m_hi, int oversample) {
    if (!(a_base > 1.0)) throw std::invalid_argument("dlp_estimate: A <= 1");
    if (m_lo < 1 || m_hi < m_lo) throw std::invalid_argument("dlp_estimate: bad block range");
    if (m_hi > dlp_max_block(s, a_base))
        throw std::invalid_argument("dlp_estimate: range outside spectrum");

    DlpResult out;
    std::vector<double> xs, ys;
    for (int m = m_lo; m <= m_hi; ++m) {
        const int l_top = std::min(static_cast<int>(std::ceil(std::pow(a_base, m))) - 1, s.l_max());
        // amplification guard: deconvolution factor at the block top <= e
        if (kTwoPi * l_top * s.t0 > 1.0) {
            out.excluded_blocks.push_back(m);
            continue;
        }
        const double sup = dyadic_block_supnorm(s, m, a_base, oversample);
        if (sup <= 0.0) {
            out.excluded_blocks.push_back(m);
            continue;
        }
        xs.push_back(static_cast<double>(m));
        ys.push_back(std::log(sup) / std::log(a_base));
        out.used_blocks.push_back(m);
    }
    if (xs.size() < 8) throw std::domain_error("dlp_estimate: insufficient-blocks");
    out.fit = linreg(xs, ys);
    out.eta = -out.fit.slope;
    out.c = out.fit.intercept;
    out.eta_stderr = out.fit.slope_stderr;
    return out;
}

std::vector<double> log_spaced(double lo, double hi, int n) {
    if (!(lo > 0.0 && hi > lo) || n < 2) throw std::invalid_argument("log_spaced: bad range");
    std::vector<double> v(static_cast<std::size_t>(n));
    const double llo = std::log(lo), lhi = std::log(hi);
    for (int i = 0; i < n; ++i)
        v[static_cast<std::size_t>(i)] = std::exp(llo + (lhi - llo) * i / (n - 1));
    return v;
}

}  // namespace bruno
