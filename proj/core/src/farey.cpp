#include "bruno/farey.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "bruno/nicf.hpp"

namespace bruno {

void farey_each(std::int64_t n, const std::function<void(std::int64_t, std::int64_t)>& fn) {
    if (n < 1) throw std::invalid_argument("farey_each: order < 1");
    fn(0, 1);
    if (n == 1) {
        fn(1, 1);
        return;
    }
    // two running predecessors, starting with 0/1 and 1/n
    std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = n;
    fn(p1, q1);
    while (p1 != 1 || q1 != 1) {
        const std::int64_t r = (n + q0) / q1;
        const std::int64_t p2 = -p0 + r * p1;
        const std::int64_t q2 = -q0 + r * q1;
        fn(p2, q2);
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
    }
}

FareySeries farey_series(std::int64_t n) {
    FareySeries s;
    s.order = n;
    farey_each(n, [&](std::int64_t p, std::int64_t q) { s.elements.emplace_back(p, q); });
    return s;
}

FareySeries farey_brute(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("farey_brute: order < 1");
    if (n > 2000) throw std::invalid_argument("farey_brute: order > 2000 (quadratic cost)");
    FareySeries s;
    s.order = n;
    std::vector<std::pair<std::int64_t, std::int64_t>> v;
    v.emplace_back(0, 1);
    for (std::int64_t q = 1; q <= n; ++q)
        for (std::int64_t p = 1; p <= q; ++p)
            if (std::gcd(p, q) == 1) v.emplace_back(p, q);
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
        return a.first * b.second < b.first * a.second;
    });
    s.elements.reserve(v.size());
    for (const auto& [p, q] : v) s.elements.emplace_back(p, q);
    return s;
}

std::pair<Rational, Rational> farey_neighbors(const Rational& r) {
    if (r.num() <= 0 || r.num() >= r.den())
        throw std::invalid_argument("farey_neighbors: endpoints 0/1 and 1/1 have no two-sided neighbors");

    const NicfExpansion e = nicf_expand_rational(r);
    const ConvergentTable c = convergents(e);
    const std::ptrdiff_t nbar = c.max_index();

    const auto& [pt, qt] = c.at(nbar - 1);  // Truncate
    Rational trunc(pt, qt);
    Rational sub(r.num() - pt, r.den() - qt);  // Subtract one

    // p/q - pT/qT = (-1)^(nbar+1) eps_0...eps_{nbar-1} / (q q_{nbar-1})
    int sign = (nbar % 2 == 0) ? -1 : +1;
    for (std::ptrdiff_t i = 0; i < nbar; ++i) sign *= e.pairs[static_cast<std::size_t>(i)].eps;

    if (sign > 0) return {std::move(trunc), std::move(sub)};
    return {std::move(sub), std::move(trunc)};
}

}  // namespace bruno
