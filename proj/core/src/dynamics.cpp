#include "bruno/dynamics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bruno/parallel.hpp"

namespace bruno {

namespace {

using C = std::complex<double>;

void check_lambda(C lambda) {
    const double n = std::norm(lambda);
    if (n == 0.0) throw std::invalid_argument("yoccoz: lambda = 0");
    if (n >= 1.0) throw std::domain_error("yoccoz: non-contracting");
}

}  // namespace

void IterationBudget::validate() const {
    if (!(eps_u > 0.0)) throw std::invalid_argument("IterationBudget: eps_u <= 0");
    if (!(rho > 0.0 && rho < 0.25)) throw std::invalid_argument("IterationBudget: need 0 < rho < 1/4");
    if (n_cap < 1) throw std::invalid_argument("IterationBudget: n_cap < 1");
}

std::complex<double> yoccoz_u_iterate(std::complex<double> lambda, std::int64_t n) {
    C z(0.5, 0.0);
    C u(0.5, 0.0);
    for (std::int64_t k = 0; k < n; ++k) {
        const C w = 1.0 - z;
        u *= w;
        z = lambda * z * w;
    }
    return u;
}

std::complex<double> yoccoz_u(std::complex<double> lambda, const IterationBudget& budget) {
    budget.validate();
    check_lambda(lambda);
    const double rho_sq = budget.rho * budget.rho;

    C z(0.5, 0.0);
    C u(0.5, 0.0);
    std::int64_t n = 0;
    while (std::norm(z) > rho_sq) {
        const C w = 1.0 - z;
        u *= w;
        z = lambda * z * w;
        if (++n >= budget.n_cap) throw std::domain_error("yoccoz: budget-exhausted");
    }
    // double until two successive estimates agree
    for (;;) {
        const C u_prev = u;
        const std::int64_t target = 2 * std::max<std::int64_t>(n, 1);
        while (n < target) {
            const C w = 1.0 - z;
            u *= w;
            z = lambda * z * w;
            if (++n >= budget.n_cap) throw std::domain_error("yoccoz: budget-exhausted");
        }
        if (std::abs(u - u_prev) <= budget.eps_u) return u;
    }
}

std::complex<double> yoccoz_v(std::complex<double> lambda, const IterationBudget& budget) {
    return -lambda * yoccoz_u(lambda, budget);
}

std::complex<double> yoccoz_v_direct(std::complex<double> lambda, const IterationBudget& budget) {
    budget.validate();
    check_lambda(lambda);
    // conjugacy y = -lambda z maps |z| <= rho to |y| <= rho|lambda|
    const double stop_sq = std::norm(lambda) * budget.rho * budget.rho;

    C y = -0.5 * lambda;  // critical point of Q_lambda
    C v = y;
    std::int64_t n = 0;
    while (std::norm(y) > stop_sq) {
        v *= 1.0 + y / lambda;
        y = y * (lambda + y);
        if (++n >= budget.n_cap) throw std::domain_error("yoccoz: budget-exhausted");
    }
    for (;;) {
        const C v_prev = v;
        const std::int64_t target = 2 * std::max<std::int64_t>(n, 1);
        while (n < target) {
            v *= 1.0 + y / lambda;
            y = y * (lambda + y);
            if (++n >= budget.n_cap) throw std::domain_error("yoccoz: budget-exhausted");
        }
        if (std::abs(v - v_prev) <= budget.eps_u) return v;
    }
}

std::vector<std::complex<double>> log_u_unwrapped(double t, int n_points,
                                                  const IterationBudget& budget, int threads) {
    if (!(t > 0.0)) throw std::invalid_argument("log_u_unwrapped: t <= 0");
    if (n_points < 16) throw std::invalid_argument("log_u_unwrapped: n_points < 16");
    budget.validate();

    const double radius = std::exp(-2.0 * std::numbers::pi * t);
    std::vector<C> u(static_cast<std::size_t>(n_points));
    parallel_for(u.size(), threads, [&](std::size_t j) {
        const double th = 2.0 * std::numbers::pi * static_cast<double>(j) / n_points;
        u[j] = yoccoz_u(C(radius * std::cos(th), radius * std::sin(th)), budget);
    });

    // sequential unwrap of the phase
    std::vector<C> out(u.size());
    double prev_raw = 0.0;
    double prev_arg = 0.0;
    for (std::size_t j = 0; j < u.size(); ++j) {
        const double mag = std::log(std::abs(u[j]));
        const double raw = std::arg(u[j]);
        double arg = raw;
        if (j > 0) {
            double inc = raw - prev_raw;
            while (inc > std::numbers::pi) inc -= 2.0 * std::numbers::pi;
            while (inc <= -std::numbers::pi) inc += 2.0 * std::numbers::pi;
            arg = prev_arg + inc;
        }
        out[j] = C(mag, arg);
        prev_raw = raw;
        prev_arg = arg;
    }
    return out;
}

std::vector<HSample> h_grid(double t, int n_points, const IterationBudget& budget,
                            const BrunoTable& table, const CutoffConfig& cfg, int threads) {
    const std::vector<C> lu = log_u_unwrapped(t, n_points, budget, threads);
    std::vector<HSample> out(lu.size());
    parallel_for(out.size(), threads, [&](std::size_t j) {
        const double x = static_cast<double>(j) / n_points;
        const C b = bruno_complex(C(x, t), table, cfg);
        out[j] = HSample{x, t, lu[j] - C(0.0, 1.0) * b};
    });
    return out;
}

}  // namespace bruno
