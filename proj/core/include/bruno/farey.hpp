#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "bruno/rational.hpp"

namespace bruno {

/// Farey series of order n: every reduced p/q in [0,1] with q <= n,
/// in increasing order. Consecutive elements are unimodular neighbors.
struct FareySeries {
    std::int64_t order = 0;
    std::vector<Rational> elements;
};

/// Streams the elements of F_n in increasing order as (p,q) pairs,
/// using the neighbor recursion p' = -p_prev + r*p, r = floor((n+q_prev)/q).
void farey_each(std::int64_t n, const std::function<void(std::int64_t p, std::int64_t q)>& fn);

FareySeries farey_series(std::int64_t n);

/// Quadratic-cost oracle: enumerate, reduce, sort. Intended for tests.
FareySeries farey_brute(std::int64_t n);

/// Immediate predecessor and successor of p/q in F_q, computed from the
/// NICF of p/q via the Truncate / Subtract-one surgeries. Orientation is
/// assigned by the sign of (-1)^(nbar+1) * eps_0...eps_{nbar-1}.
/// Rejects the endpoints 0/1 and 1/1.
std::pair<Rational, Rational> farey_neighbors(const Rational& r);

}  // namespace bruno
