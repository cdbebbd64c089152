#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "bruno/bruno_complex.hpp"

namespace bruno {

/// Stopping policy for the critical-orbit iteration: iterate until the
/// orbit is inside the smallness radius rho, then keep doubling the
/// iteration count until two successive estimates agree to eps_u.
struct IterationBudget {
    double eps_u = 1e-3;
    double rho = 1e-4;
    std::int64_t n_cap = 10'000'000;

    void validate() const;
};

/// U_n(lambda) = lambda^{-n} P_lambda^n(1/2) for P_lambda(z) = lambda z (1-z),
/// computed by the product form U_{k+1} = U_k (1 - z_k) (no large powers,
/// and U_1 = 1/4 exactly).
std::complex<double> yoccoz_u_iterate(std::complex<double> lambda, std::int64_t n);

/// Yoccoz function U(lambda) on 0 < |lambda| < 1.
/// Throws "non-contracting" for |lambda| >= 1 and "budget-exhausted" when
/// n_cap is reached before stabilization.
std::complex<double> yoccoz_u(std::complex<double> lambda, const IterationBudget& budget = {});

/// Yoccoz function of the conjugate polynomial Q_lambda(z) = lambda z + z^2:
/// V(lambda) = -lambda U(lambda).
std::complex<double> yoccoz_v(std::complex<double> lambda, const IterationBudget& budget = {});

/// V by direct iteration of Q_lambda from its critical point -lambda/2;
/// independent cross-check of the conjugation identity.
std::complex<double> yoccoz_v_direct(std::complex<double> lambda, const IterationBudget& budget = {});

/// log U(e^{2 pi i (x_j + i t)}) on the uniform grid x_j = j/n over [0,1),
/// imaginary part unwrapped sequentially (phase increments forced into
/// (-pi, pi], first point on the principal branch).
std::vector<std::complex<double>> log_u_unwrapped(double t, int n_points,
                                                  const IterationBudget& budget = {},
                                                  int threads = 0);

struct HSample {
    double x;
    double t;
    std::complex<double> value;  // log U(e^{2 pi i (x+it)}) - i B(x+it)
};

/// H on the uniform grid x_j = j/n over [0,1).
std::vector<HSample> h_grid(double t, int n_points, const IterationBudget& budget,
                            const BrunoTable& table, const CutoffConfig& cfg, int threads = 0);

}  // namespace bruno
