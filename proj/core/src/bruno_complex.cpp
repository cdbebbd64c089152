#include "bruno/bruno_complex.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "bruno/parallel.hpp"
#include "bruno/special_functions.hpp"

namespace bruno {

namespace {

using C = std::complex<double>;

// Taylor model: coefficients from a Cauchy integral on a circle of radius
// kCauchyRadius * dist(K, [0,1]); the model is used for |delta| up to
// kDeltaMax * dist, where the A_2..A_15 truncation is below 1e-16.
constexpr double kCauchyRadius = 0.35;
constexpr double kDeltaMax = 0.08;
constexpr int kCauchyPoints = 32;  // power of two, conjugate-symmetric

struct Int64Nicf {
    // pairs (a_i, eps_i) for i >= 1 only; a0 is always (0,+1) for p/q in (0,1/2],
    // (1,-1) otherwise, and only the eps chain and the last quotient matter here.
    std::vector<std::pair<std::int64_t, int>> pairs;
    int eps0;
};

// Standard-form NICF of p/q in (0,1), ties down; int64 fast path for the
// table builder (q <= n_max stays far below the overflow range).
Int64Nicf nicf_int64(std::int64_t p, std::int64_t q) {
    Int64Nicf out;
    const bool upper = 2 * p > q;
    out.eps0 = upper ? -1 : +1;
    std::int64_t num = upper ? q - p : p;
    std::int64_t den = q;
    while (num != 0) {
        const std::int64_t a = (2 * den + num - 1) / (2 * num);
        const int eps = (den >= a * num) ? +1 : -1;
        const std::int64_t nn = std::abs(den - a * num);
        out.pairs.emplace_back(a, eps);
        den = num;
        num = nn;
    }
    return out;
}

struct RawMatrix {
    std::int64_t pstar, p, qstar, q;
    bool type_s;
};

// (p_T p; q_T q) and, when the expansion ends with (2,+1), (p_S p; q_S q).
void fraction_matrices(std::int64_t p, std::int64_t q, std::vector<RawMatrix>& out) {
    const Int64Nicf e = nicf_int64(p, q);
    std::int64_t pm2 = 0, qm2 = 1, pm1 = 1, qm1 = 0;  // n = -2, -1 seeds
    int eps_prev = 1;
    std::int64_t a0 = (2 * p > q) ? 1 : 0;
    {  // n = 0 row
        const std::int64_t p0 = a0 * pm1 + pm2, q0 = a0 * qm1 + qm2;
        pm2 = pm1; qm2 = qm1; pm1 = p0; qm1 = q0;
        eps_prev = e.eps0;
    }
    for (const auto& [a, eps] : e.pairs) {
        const std::int64_t pn = a * pm1 + eps_prev * pm2;
        const std::int64_t qn = a * qm1 + eps_prev * qm2;
        pm2 = pm1; qm2 = qm1; pm1 = pn; qm1 = qn;
        eps_prev = eps;
    }
    // pm1/qm1 = p/q, pm2/qm2 = truncated convergent
    out.push_back({pm2, p, qm2, q, false});
    if (!e.pairs.empty() && e.pairs.back().first == 2)
        out.push_back({p - pm2, p, q - qm2, q, true});
}

BrunoTable::Entry make_entry(const RawMatrix& m) {
    BrunoTable::Entry e;
    e.p = static_cast<std::int32_t>(m.p);
    e.q = static_cast<std::int32_t>(m.q);
    e.pstar = static_cast<std::int32_t>(m.pstar);
    e.qstar = static_cast<std::int32_t>(m.qstar);
    e.type_s = m.type_s;
    const double det = static_cast<double>(m.pstar * m.q - m.p * m.qstar);
    const double c = static_cast<double>(m.qstar);
    const double k = -static_cast<double>(m.q) / c;
    e.det_over_c = det / c;

    // Derivatives of psi at K by a Cauchy integral; the contour stays in
    // the left half plane, well away from the singular set [0,1].
    const double rho = -k;  // dist(K, [0,1])
    const double radius = kCauchyRadius * rho;

    static const auto trig = [] {
        std::array<std::pair<double, double>, kCauchyPoints> t{};
        for (int i = 0; i < kCauchyPoints; ++i) {
            const double th = 2.0 * std::numbers::pi * i / kCauchyPoints;
            t[static_cast<std::size_t>(i)] = {std::cos(th), std::sin(th)};
        }
        return t;
    }();

    std::array<C, kCauchyPoints> f;
    for (int mth = 0; mth <= kCauchyPoints / 2; ++mth) {
        const auto& [cth, sth] = trig[static_cast<std::size_t>(mth)];
        f[static_cast<std::size_t>(mth)] = one_plus_sigma(C(k + radius * cth, radius * sth));
    }
    for (int mth = kCauchyPoints / 2 + 1; mth < kCauchyPoints; ++mth)
        f[static_cast<std::size_t>(mth)] = std::conj(f[static_cast<std::size_t>(kCauchyPoints - mth)]);

    // psi^{(j)}(K) / j!, real by conjugate symmetry of the samples
    std::array<double, BrunoTable::kTaylorTerms + 2> co;
    double rpow = 1.0;
    for (int j = 0; j < BrunoTable::kTaylorTerms + 2; ++j) {
        double acc = 0.0;
        for (int mth = 0; mth < kCauchyPoints; ++mth) {
            const auto& [cth, sth] = trig[static_cast<std::size_t>((j * mth) & (kCauchyPoints - 1))];
            acc += f[static_cast<std::size_t>(mth)].real() * cth +
                   f[static_cast<std::size_t>(mth)].imag() * sth;
        }
        co[static_cast<std::size_t>(j)] = acc / (kCauchyPoints * rpow);
        rpow *= radius;
    }

    e.psi_k = co[0];
    e.dpsi_k = e.det_over_c * co[1];
    for (int j = 0; j < BrunoTable::kTaylorTerms; ++j)
        e.taylor[static_cast<std::size_t>(j)] = e.det_over_c * co[static_cast<std::size_t>(j + 2)];
    const double dmax = kDeltaMax * rho;
    e.delta_max_sq = dmax * dmax;
    return e;
}

// Per-entry translated action, Taylor path when far from the block.
inline C entry_term(const BrunoTable::Entry& e, C z, double n) {
    const double a = e.pstar, c = e.qstar;
    const C den(a - c * z.real() + c * n, -c * z.imag());
    const double norm_den = std::norm(den);
    const C delta = e.det_over_c * std::conj(den) / norm_den;
    if (std::norm(delta) <= e.delta_max_sq) {
        C acc(e.taylor[BrunoTable::kTaylorTerms - 1], 0.0);
        for (int j = BrunoTable::kTaylorTerms - 2; j >= 0; --j) acc = acc * delta + e.taylor[j];
        return acc * delta;
    }
    const C zp = z - n;
    const C w = (static_cast<double>(e.q) * zp - static_cast<double>(e.p)) / den;
    return den * (one_plus_sigma(w) - e.psi_k) - e.dpsi_k;
}

C eval_raw(C z, std::span<const BrunoTable::Entry> entries, const CutoffConfig& cfg) {
    if (!(z.imag() > 0.0)) throw std::domain_error("bruno_complex: lower-half-plane");
    C tot(0.0, 0.0);
    // identity term of the monoid
    for (int n = -cfg.k1; n < cfg.k1; ++n) tot += one_plus_sigma(z - static_cast<double>(n));
    for (const BrunoTable::Entry& e : entries) {
        const int k = (e.q <= cfg.q_switch) ? cfg.k1 : cfg.k2;
        C sub(0.0, 0.0);
        for (int n = -k; n < k; ++n) sub += entry_term(e, z, static_cast<double>(n));
        tot += sub;
    }
    return tot;
}

}  // namespace

void CutoffConfig::validate() const {
    if (n_max < 2) throw std::invalid_argument("CutoffConfig: n_max < 2");
    if (k2 < 1 || k1 < k2) throw std::invalid_argument("CutoffConfig: need k1 >= k2 >= 1");
    if (q_switch < 2 || q_switch > n_max)
        throw std::invalid_argument("CutoffConfig: need 2 <= q_switch <= n_max");
}

std::span<const BrunoTable::Entry> BrunoTable::entries_up_to(int m) const {
    auto it = std::upper_bound(entries_.begin(), entries_.end(), m,
                               [](int value, const Entry& e) { return value < e.q; });
    return {entries_.data(), static_cast<std::size_t>(it - entries_.begin())};
}

BrunoTable build_table(const CutoffConfig& cfg, int threads) {
    cfg.validate();
    std::vector<RawMatrix> raw;
    raw.reserve(static_cast<std::size_t>(0.45 * cfg.n_max * cfg.n_max) + 16);
    for (std::int64_t q = 2; q <= cfg.n_max; ++q)
        for (std::int64_t p = 1; p < q; ++p)
            if (std::gcd(p, q) == 1) fraction_matrices(p, q, raw);

    BrunoTable table;
    table.n_max_ = cfg.n_max;
    table.entries_.resize(raw.size());
    parallel_for(raw.size(), threads,
                 [&](std::size_t i) { table.entries_[i] = make_entry(raw[i]); });
    return table;
}

std::complex<double> bruno_complex_raw(std::complex<double> z, const BrunoTable& table,
                                       const CutoffConfig& cfg) {
    cfg.validate();
    if (cfg.n_max > table.n_max()) throw std::invalid_argument("bruno_complex: table too small");
    return eval_raw(z, table.entries_up_to(cfg.n_max), cfg);
}

std::complex<double> bruno_complex(std::complex<double> z, const BrunoTable& table,
                                   const CutoffConfig& cfg) {
    if (!(z.imag() > 0.0)) throw std::domain_error("bruno_complex: lower-half-plane");
    const double xr = z.real() - std::floor(z.real());
    if (xr <= 0.5) return bruno_complex_raw(C(xr, z.imag()), table, cfg);
    const C v = bruno_complex_raw(C(1.0 - xr, z.imag()), table, cfg);
    return -std::conj(v);
}

double jump_at(const Rational& r, double t, double delta, const BrunoTable& table,
               const CutoffConfig& cfg) {
    if (!(t > 0.0)) throw std::invalid_argument("jump_at: t <= 0");
    const double x0 = r.to_double();
    if (!(x0 >= 0.0 && x0 < 1.0)) throw std::invalid_argument("jump_at: fraction outside [0,1)");
    const double q = r.den().get_d();
    if (!(delta > 0.0 && delta * q * q <= 0.1))
        throw std::invalid_argument("jump_at: need 0 < delta << 1/q^2");
    const C right = bruno_complex_raw(C(x0 + delta, t), table, cfg);
    const C left = bruno_complex_raw(C(x0 - delta, t), table, cfg);
    return std::abs(right.real() - left.real());
}

std::vector<GridRow> bruno_grid(double t, double x_lo, double x_hi, int n_points,
                                const BrunoTable& table, const CutoffConfig& cfg, int threads) {
    if (!(t > 0.0)) throw std::invalid_argument("bruno_grid: t <= 0");
    if (n_points < 2) throw std::invalid_argument("bruno_grid: n_points < 2");
    if (!(x_hi > x_lo)) throw std::invalid_argument("bruno_grid: empty range");
    cfg.validate();
    std::vector<GridRow> rows(static_cast<std::size_t>(n_points));
    const double step = (x_hi - x_lo) / (n_points - 1);
    parallel_for(rows.size(), threads, [&](std::size_t i) {
        const double x = x_lo + step * static_cast<double>(i);
        rows[i] = GridRow{x, t, bruno_complex(C(x, t), table, cfg)};
    });
    return rows;
}

std::vector<double> cutoff_study(CutoffParam varied, const std::vector<int>& values,
                                 const CutoffConfig& reference,
                                 const std::vector<std::complex<double>>& grid,
                                 const BrunoTable& table, int threads) {
    reference.validate();
    if (table.n_max() < reference.n_max)
        throw std::invalid_argument("cutoff_study: table smaller than reference");
    for (int v : values) {
        const bool ok = (varied == CutoffParam::n_max && v >= 2 && v <= reference.n_max) ||
                        (varied == CutoffParam::k1 && v >= reference.k2 && v <= reference.k1) ||
                        (varied == CutoffParam::k2 && v >= 1 && v <= reference.k2);
        if (!ok) throw std::invalid_argument("cutoff_study: reference must dominate varied value");
    }

    std::vector<C> ref(grid.size());
    parallel_for(grid.size(), threads,
                 [&](std::size_t i) { ref[i] = bruno_complex(grid[i], table, reference); });

    std::vector<double> means;
    means.reserve(values.size());
    std::vector<double> rel(grid.size());
    for (int v : values) {
        CutoffConfig cfg = reference;
        if (varied == CutoffParam::n_max) {
            cfg.n_max = v;
            cfg.q_switch = std::min(cfg.q_switch, v);
        } else if (varied == CutoffParam::k1) {
            cfg.k1 = v;
        } else {
            cfg.k2 = v;
        }
        parallel_for(grid.size(), threads, [&](std::size_t i) {
            rel[i] = std::abs(bruno_complex(grid[i], table, cfg) - ref[i]) / std::abs(ref[i]);
        });
        means.push_back(std::accumulate(rel.begin(), rel.end(), 0.0) /
                        static_cast<double>(rel.size()));
    }
    return means;
}

}  // namespace bruno
