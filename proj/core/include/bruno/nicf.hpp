#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "bruno/rational.hpp"

namespace bruno {

// Nearest-integer continued fraction x = a0 + e0/(a1 + e1/(a2 + ...)),
// partial quotients a_i >= 2 for i >= 1, signs e_i in {+1,-1}, remainders
// in (0,1/2). Ties of the nearest-integer rounding are broken downward
// (remainder exactly 1/2, sign +1), which keeps every expansion in
// standard form: no pair (2,-1) anywhere, and a final quotient 2 is always
// preceded by sign +1.

struct NicfPair {
    std::int64_t a;
    int eps;  // +1 or -1

    friend bool operator==(const NicfPair& x, const NicfPair& y) {
        return x.a == y.a && x.eps == y.eps;
    }
};

struct NicfExpansion {
    std::vector<NicfPair> pairs;
    bool exact = false;  // true when produced from a Rational

    std::size_t length() const { return pairs.empty() ? 0 : pairs.size() - 1; }  // n-bar
};

/// Convergents p_n/q_n of an expansion, with the seed rows
/// p_{-2}=0, q_{-2}=1 and p_{-1}=1, q_{-1}=0 stored up front.
struct ConvergentTable {
    std::vector<std::pair<mpz_class, mpz_class>> entries;  // index 0 <-> n = -2

    const std::pair<mpz_class, mpz_class>& at(std::ptrdiff_t n) const { return entries[n + 2]; }
    std::ptrdiff_t max_index() const { return static_cast<std::ptrdiff_t>(entries.size()) - 3; }
};

/// Exact expansion of a rational in [0,1). Terminates for every input.
NicfExpansion nicf_expand_rational(const Rational& r);

struct RealExpansion {
    NicfExpansion expansion;
    std::vector<double> remainders;  // x_0, x_1, ...
    bool rational_detected = false;  // some remainder hit exactly zero
};

/// Floating-point expansion of x in [0,1); stops when a remainder drops
/// below stop_tol, when max_terms partial quotients have been emitted, or
/// when a remainder is exactly zero (rational_detected).
RealExpansion nicf_expand_real(double x, int max_terms, double stop_tol);

ConvergentTable convergents(const NicfExpansion& e);

/// Value of a finite expansion as a reduced Rational (last convergent).
Rational nicf_evaluate(const NicfExpansion& e);

/// Distance of x to the nearest integer, folded into [0, 1/2].
double reduce_half(double x);

/// Real 1/2-Bruno function B(x) = sum_k beta_{k-1} log(1/x_k) for
/// x in (0,1/2). The sum is truncated once the tail bound
/// beta_{k-1} log(1/x_k) / (1 - x_k) falls below tail_tol; with every
/// remainder below 1/2 the remaining tail is dominated by a geometric
/// series of ratio 1/2. Throws "rational-input" when the orbit reaches
/// (numerically) a rational point.
///
/// The orbit is carried in extended precision: the map expands by 1/x^2
/// per step, so B responds to an input perturbation delta at the
/// sqrt(delta) scale. Callers needing better than ~1e-8 absolute accuracy
/// must seed with the mpf overload; the double overload is limited by the
/// rounding of its own argument.
double bruno_real(const mpf_class& x, double tail_tol = 1e-12, int max_terms = 400);
double bruno_real(double x, double tail_tol = 1e-12, int max_terms = 400);

}  // namespace bruno
