#pragma once

#include <complex>
#include <stdexcept>

#include "bruno/monoid.hpp"

namespace bruno {

using Complex = std::complex<double>;

/// Dilogarithm Li2(z) on C \ [1,inf), principal branch, continuous off
/// the cut. Power series for |z| <= 1/2, standard reflection/inversion
/// identities elsewhere, and a log-argument series on the remaining
/// annulus. Throws "on-cut" for real z >= 1.
Complex dilog(Complex z);

/// Hyperfunction kernel: Hilbert transform of the even 1-periodic -log,
///   phi(z) = -(1/pi) Li2(1/(2z)) + (log2/pi) log(1 - 1/(2z)),
/// holomorphic on C \ [0,1/2] and vanishing at infinity.
/// Throws "on-support" for real z in [0,1/2].
Complex phi_half(Complex z);

/// Closed-form derivative of phi_half.
Complex phi_half_deriv(Complex z);

/// (1 + L_sigma) phi = phi(z) - phi(1-z); singular support [0,1].
Complex one_plus_sigma(Complex z);

/// Derivative phi'(z) + phi'(1-z).
Complex one_plus_sigma_deriv(Complex z);

/// Weighted action of g = (a b; c d) on a kernel f with derivative df:
///   c > 0: (a-cz) [f((dz-b)/(a-cz)) - f(-d/c)] - det/c * df(-d/c)
///   c = 0: (a-cz) f((dz-b)/(a-cz))        (the two constant terms vanish
///          in the limit since f and df decay at infinity)
/// Throws "pole" when a - cz = 0.
template <class F, class DF>
Complex l_action_with(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, Complex z,
                      F&& f, DF&& df) {
    const Complex den = static_cast<double>(a) - static_cast<double>(c) * z;
    if (den == Complex(0.0, 0.0)) throw std::domain_error("l_action: pole");
    const Complex w = (static_cast<double>(d) * z - static_cast<double>(b)) / den;
    if (c == 0) return den * f(w);
    const double k = -static_cast<double>(d) / static_cast<double>(c);
    const double det = static_cast<double>(a * d - b * c);
    return den * (f(w) - f(Complex(k, 0.0))) - det / static_cast<double>(c) * df(Complex(k, 0.0));
}

/// l_action_with applied to the phi_half kernel. Requires c >= 0.
Complex l_action(const MonoidMatrix& g, Complex z);

}  // namespace bruno
