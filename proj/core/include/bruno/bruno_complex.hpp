#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "bruno/rational.hpp"

namespace bruno {

/// Truncation parameters of the modular sum: n_max is the largest Farey
/// order, k1/k2 the half-widths of the integer-translation window for
/// fractions with small/large denominator, q_switch the threshold between
/// the two regimes.
struct CutoffConfig {
    int n_max = 151;
    int k1 = 80;
    int k2 = 20;
    int q_switch = 20;

    void validate() const;
};

/// Precomputed per-matrix data for the truncated sum over the monoid.
/// Each entry carries the matrix (a b; c d) = (p* p; q* q) of one fraction
/// (type T always, type S when the expansion ends with (2,+1)) together
/// with the constants of the translated action
///     L_g psi(z') = (a-cz')[psi(w) - psi(K)] - det/c * psi'(K),
/// K = -d/c, and a Taylor model in delta = det/(c(a-cz')) used when z' is
/// far from the singular block: L_g psi = sum_{j>=2} A_j delta^{j-1}.
/// The Taylor path avoids the large cancellation (a-cz') * O(eps) of the
/// direct form, keeping the accumulated sum accurate to ~1e-14.
class BrunoTable {
public:
    static constexpr int kTaylorTerms = 14;  // A_2 .. A_15

    struct Entry {
        std::int32_t p, q;        // second column (b,d)
        std::int32_t pstar, qstar;  // first column (a,c)
        bool type_s;
        double det_over_c;   // det/c
        double psi_k;        // psi(K)
        double dpsi_k;       // det/c * psi'(K)
        double delta_max_sq; // squared radius of the Taylor model
        std::array<double, kTaylorTerms> taylor;  // A_2..A_{15}
    };

    int n_max() const { return n_max_; }
    const std::vector<Entry>& entries() const { return entries_; }

    /// Entries restricted to fractions with q <= m (prefix of the (q,p)
    /// ordering); used by the cut-off study.
    std::span<const Entry> entries_up_to(int m) const;

private:
    friend BrunoTable build_table(const CutoffConfig&, int);
    int n_max_ = 0;
    std::vector<Entry> entries_;  // ordered by (q, p), type T before type S
};

/// Builds the table over all interior fractions of F_{n_max}.
BrunoTable build_table(const CutoffConfig& cfg, int threads = 0);

/// Truncated 1/2-complex Bruno function, Im z > 0. The input is reduced
/// to Re z in [0,1/2] by the exact 1-periodicity and the parity
/// (odd real part, even imaginary part) before evaluation.
std::complex<double> bruno_complex(std::complex<double> z, const BrunoTable& table,
                                   const CutoffConfig& cfg);

/// The truncated sum itself, without reduction. The translation window
/// n in [-k, k-1] tiles the sigma-blocks [n, n+1] symmetrically about 0,
/// which makes the x -> -x parity of the truncation exact.
std::complex<double> bruno_complex_raw(std::complex<double> z, const BrunoTable& table,
                                       const CutoffConfig& cfg);

/// |Re B(p/q + delta + it) - Re B(p/q - delta + it)|, both sides evaluated
/// with the unreduced sum so that the smooth truncation defect cancels in
/// the difference. Approaches pi/q as t, delta -> 0.
double jump_at(const Rational& r, double t, double delta, const BrunoTable& table,
               const CutoffConfig& cfg);

struct GridRow {
    double x;
    double t;
    std::complex<double> b;
};

/// Uniform grid evaluation on [x_lo, x_hi] (inclusive endpoints),
/// parallel over points, rows ordered by x.
std::vector<GridRow> bruno_grid(double t, double x_lo, double x_hi, int n_points,
                                const BrunoTable& table, const CutoffConfig& cfg,
                                int threads = 0);

enum class CutoffParam { n_max, k1, k2 };

/// Mean relative error |B_M - B_ref| / |B_ref| over the grid, for each
/// value of the varied cut-off, against the reference configuration.
/// The reference must dominate every varied configuration.
std::vector<double> cutoff_study(CutoffParam varied, const std::vector<int>& values,
                                 const CutoffConfig& reference,
                                 const std::vector<std::complex<double>>& grid,
                                 const BrunoTable& table, int threads = 0);

}  // namespace bruno
