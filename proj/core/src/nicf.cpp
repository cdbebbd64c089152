#include "bruno/nicf.hpp"

#include <cmath>
#include <stdexcept>

namespace bruno {

namespace {

// Remainders this small are treated as rational hits of the floating orbit.
constexpr double kRationalEps = 1e-13;

}  // namespace

NicfExpansion nicf_expand_rational(const Rational& r) {
    if (r.num() < 0 || r >= Rational(1, 1))
        throw std::invalid_argument("nicf_expand_rational: input outside [0,1)");

    NicfExpansion e;
    e.exact = true;

    // a0 in {0,1}: 0 for p/q <= 1/2 (ties down), 1 otherwise.
    const bool upper = 2 * r.num() > r.den();
    const std::int64_t a0 = upper ? 1 : 0;
    e.pairs.push_back({a0, upper ? -1 : +1});

    mpz_class p = upper ? mpz_class(r.den() - r.num()) : r.num();  // |r - a0|, denominator r.den()
    mpz_class q = r.den();

    while (p != 0) {
        // nearest integer to q/p, rounding half down: floor((2q + p - 1) / (2p))
        mpz_class a = (2 * q + p - 1) / (2 * p);
        const int eps = (q >= a * p) ? +1 : -1;
        mpz_class np = abs(q - a * p);
        if (!a.fits_slong_p())
            throw std::overflow_error("nicf_expand_rational: partial quotient exceeds int64");
        e.pairs.push_back({a.get_si(), eps});
        q = p;
        p = np;
    }
    return e;
}

RealExpansion nicf_expand_real(double x, int max_terms, double stop_tol) {
    if (!(x >= 0.0 && x < 1.0)) throw std::invalid_argument("nicf_expand_real: input outside [0,1)");
    if (max_terms < 1) throw std::invalid_argument("nicf_expand_real: max_terms < 1");
    if (!(stop_tol > 0.0)) throw std::invalid_argument("nicf_expand_real: stop_tol <= 0");

    RealExpansion out;
    const bool upper = x > 0.5;
    out.expansion.pairs.push_back({upper ? 1 : 0, upper ? -1 : +1});
    double xk = upper ? 1.0 - x : x;
    out.remainders.push_back(xk);

    for (int k = 0; k < max_terms; ++k) {
        if (xk == 0.0) {
            out.rational_detected = true;
            break;
        }
        if (xk < stop_tol) break;
        const double inv = 1.0 / xk;
        const double fl = std::floor(inv);
        const double frac = inv - fl;
        const double a = (frac > 0.5) ? fl + 1.0 : fl;  // ties down
        const int eps = (inv >= a) ? +1 : -1;
        xk = std::abs(inv - a);
        out.expansion.pairs.push_back({static_cast<std::int64_t>(a), eps});
        out.remainders.push_back(xk);
        if (xk == 0.0) {
            out.rational_detected = true;
            break;
        }
    }
    return out;
}

ConvergentTable convergents(const NicfExpansion& e) {
    if (e.pairs.empty()) throw std::invalid_argument("convergents: empty expansion");
    ConvergentTable t;
    t.entries.reserve(e.pairs.size() + 2);
    t.entries.emplace_back(mpz_class(0), mpz_class(1));  // n = -2
    t.entries.emplace_back(mpz_class(1), mpz_class(0));  // n = -1
    int eps_prev = 1;                                    // eps_{-1} = 1
    for (const NicfPair& pr : e.pairs) {
        const auto& [p1, q1] = t.entries[t.entries.size() - 1];
        const auto& [p2, q2] = t.entries[t.entries.size() - 2];
        mpz_class p = pr.a * p1 + eps_prev * p2;
        mpz_class q = pr.a * q1 + eps_prev * q2;
        t.entries.emplace_back(std::move(p), std::move(q));
        eps_prev = pr.eps;
    }
    return t;
}

Rational nicf_evaluate(const NicfExpansion& e) {
    const ConvergentTable t = convergents(e);
    const auto& [p, q] = t.entries.back();
    return Rational(p, q);
}

double reduce_half(double x) {
    double y = x - std::floor(x);
    return y <= 0.5 ? y : 1.0 - y;
}

double bruno_real(const mpf_class& x, double tail_tol, int max_terms) {
    const double x0 = x.get_d();
    if (!(x0 >= 0.0 && x0 <= 0.5)) throw std::invalid_argument("bruno_real: input outside [0,1/2]");
    if (x0 < kRationalEps || x0 > 0.5 - kRationalEps)
        throw std::domain_error("bruno_real: rational-input");

    // The map expands by 1/x^2 per step: an orbit with precision eps is
    // only trustworthy for ~log(1/eps)/log(1/x^2) steps, capping the sum's
    // accuracy near sqrt(eps). 192-bit remainders push that floor to
    // ~1e-29 while each emitted term only needs double accuracy.
    mpf_class xk(x, 192);
    double beta = 1.0;  // beta_{-1}
    double sum = 0.0;
    for (int k = 0; k < max_terms; ++k) {
        const double xd = xk.get_d();
        const double lg = std::log(1.0 / xd);
        if (beta * lg / (1.0 - xd) < tail_tol) return sum;
        sum += beta * lg;
        beta *= xd;
        const mpf_class inv = 1 / xk;
        mpf_class fl(inv, 192);
        mpf_floor(fl.get_mpf_t(), inv.get_mpf_t());
        const mpf_class frac = inv - fl;
        const mpf_class a = (frac > 0.5) ? fl + 1 : fl;
        xk = abs(inv - a);
        if (xk.get_d() < kRationalEps) throw std::domain_error("bruno_real: rational-input");
    }
    return sum;
}

double bruno_real(double x, double tail_tol, int max_terms) {
    return bruno_real(mpf_class(x, 192), tail_tol, max_terms);
}

}  // namespace bruno
