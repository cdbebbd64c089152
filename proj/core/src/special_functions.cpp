#include "bruno/special_functions.hpp"

#include <cmath>
#include <numbers>

namespace bruno {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPi2Over6 = 1.6449340668482264365;
constexpr double kLog2 = std::numbers::ln2;

// Li2(z) = sum_{k>=0} c_k u^{k+1}, u = -log(1-z), c_k = B_k/(k+1)!.
// Converges for |u| < 2pi; used here with |u| <= ~1.3 (<= 25 terms).
constexpr double kLogSeries[34] = {
    1.0,
    -0.25,
    0.027777777777777777778,
    0.0,
    -2.7777777777777777778e-4,
    0.0,
    4.7241118669690098262e-6,
    0.0,
    -9.1857730746619635509e-8,
    0.0,
    1.8978869988970999072e-9,
    0.0,
    -4.0647616451442255268e-11,
    0.0,
    8.9216910204564525552e-13,
    0.0,
    -1.9939295860721075687e-14,
    0.0,
    4.5189800296199181917e-16,
    0.0,
    -1.0356517612181247014e-17,
    0.0,
    2.3952186210261867457e-19,
    0.0,
    -5.5817858743250093363e-21,
    0.0,
    1.3091507554183212858e-22,
    0.0,
    -3.0874198024267402932e-24,
    0.0,
    7.3159756527022034204e-26,
    0.0,
    -1.7408456572340007410e-27,
    0.0,
};

// |z| <= 1/2: plain power series.
Complex dilog_series(Complex z) {
    Complex sum = z;
    Complex zn = z;
    for (int n = 2; n <= 52; ++n) {
        zn *= z;
        const Complex term = zn / static_cast<double>(n * n);
        sum += term;
        if (std::norm(term) < 1e-34 * std::norm(sum)) break;
    }
    return sum;
}

// |z| <= 1, Re z <= 1/2.
Complex dilog_core(Complex z) {
    if (std::norm(z) <= 0.25) return dilog_series(z);
    const Complex u = -std::log(1.0 - z);
    Complex sum(0.0, 0.0);
    for (int k = 33; k >= 0; --k) sum = kLogSeries[k] + u * sum;
    return u * sum;
}

Complex sqr(Complex z) { return z * z; }

}  // namespace

Complex dilog(Complex z) {
    if (z.imag() == 0.0 && z.real() >= 1.0) throw std::domain_error("dilog: on-cut");
    if (z == Complex(0.0, 0.0)) return z;
    if (z.real() > 0.5) {
        // reflection: Li2(z) + Li2(1-z) = pi^2/6 - log(z)log(1-z)
        const Complex w = 1.0 - z;
        Complex core = (std::norm(w) > 1.0)
                           ? -dilog_core(1.0 / w) - kPi2Over6 - 0.5 * sqr(std::log(-w))
                           : dilog_core(w);
        return kPi2Over6 - std::log(z) * std::log(w) - core;
    }
    if (std::norm(z) > 1.0) {
        // inversion: Li2(z) = -Li2(1/z) - pi^2/6 - log^2(-z)/2
        return -dilog_core(1.0 / z) - kPi2Over6 - 0.5 * sqr(std::log(-z));
    }
    return dilog_core(z);
}

Complex phi_half(Complex z) {
    if (z.imag() == 0.0 && z.real() >= 0.0 && z.real() <= 0.5)
        throw std::domain_error("phi_half: on-support");
    const Complex u = 1.0 / (2.0 * z);
    return -dilog(u) / kPi + (kLog2 / kPi) * std::log(1.0 - u);
}

Complex phi_half_deriv(Complex z) {
    if (z.imag() == 0.0 && z.real() >= 0.0 && z.real() <= 0.5)
        throw std::domain_error("phi_half: on-support");
    const Complex u = 1.0 / (2.0 * z);
    return (-std::log(1.0 - u) / z + kLog2 / (z * (2.0 * z - 1.0))) / kPi;
}

Complex one_plus_sigma(Complex z) { return phi_half(z) - phi_half(1.0 - z); }

Complex one_plus_sigma_deriv(Complex z) { return phi_half_deriv(z) + phi_half_deriv(1.0 - z); }

Complex l_action(const MonoidMatrix& g, Complex z) {
    if (g.c < 0) throw std::invalid_argument("l_action: requires c >= 0");
    return l_action_with(g.a, g.b, g.c, g.d, z, phi_half, phi_half_deriv);
}

}  // namespace bruno
