// Command-line front end: grid evaluations of the complex Bruno function
// and the Yoccoz function, Fourier/Littlewood-Paley Holder estimation,
// and the appendix-style diagnostic tables. All outputs are CSV with a
// fingerprint header line; reruns with the same configuration are
// byte-identical.

#include <CLI11.hpp>

#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "bruno/bruno_complex.hpp"
#include "bruno/csv.hpp"
#include "bruno/dynamics.hpp"
#include "bruno/farey.hpp"
#include "bruno/monoid.hpp"
#include "bruno/nicf.hpp"
#include "bruno/spectral.hpp"

namespace fs = std::filesystem;
using bruno::format_double;
using C = std::complex<double>;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitNumeric = 3;

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& msg) {
    if (!ok) throw ValidationError(msg);
}

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    require(f.good(), "cannot open output file: " + path);
    return f;
}

struct CutoffOpts {
    int nmax = 151;
    int k1 = 80;
    int k2 = 20;
    int q_switch = 20;

    void attach(CLI::App* app) {
        app->add_option("--nmax", nmax, "largest Farey order");
        app->add_option("--k1", k1, "translation half-width for small denominators");
        app->add_option("--k2", k2, "translation half-width for large denominators");
        app->add_option("--q-switch", q_switch, "small/large denominator threshold");
    }

    bruno::CutoffConfig config() const {
        bruno::CutoffConfig cfg{nmax, k1, k2, q_switch};
        try {
            cfg.validate();
        } catch (const std::invalid_argument& e) {
            throw ValidationError(e.what());
        }
        return cfg;
    }

    std::string fingerprint() const {
        std::ostringstream ss;
        ss << "nmax=" << nmax << " k1=" << k1 << " k2=" << k2 << " qswitch=" << q_switch;
        return ss.str();
    }
};

struct BudgetOpts {
    double eps_u = 1e-3;
    double rho = 1e-4;
    std::int64_t n_cap = 10'000'000;

    void attach(CLI::App* app) {
        app->add_option("--eps-u", eps_u, "target precision of the Yoccoz iteration");
        app->add_option("--rho", rho, "smallness radius for iterates");
        app->add_option("--n-cap", n_cap, "hard iteration limit");
    }

    bruno::IterationBudget budget() const {
        bruno::IterationBudget b{eps_u, rho, n_cap};
        try {
            b.validate();
        } catch (const std::invalid_argument& e) {
            throw ValidationError(e.what());
        }
        return b;
    }

    std::string fingerprint() const {
        std::ostringstream ss;
        ss << "eps_u=" << format_double(eps_u) << " rho=" << format_double(rho)
           << " ncap=" << n_cap;
        return ss.str();
    }
};

// ---- cf ----------------------------------------------------------------

int cmd_cf(const std::string& p, const std::string& q, double x, bool have_x, int max_terms,
           double stop_tol, const std::string& out_path) {
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file = open_out(out_path);
        os = &file;
    }
    bruno::NicfExpansion e;
    if (have_x) {
        require(x >= 0.0 && x < 1.0, "--x must lie in [0,1)");
        require(max_terms >= 1, "--max-terms must be >= 1");
        require(stop_tol > 0.0, "--stop-tol must be positive");
        auto real = bruno::nicf_expand_real(x, max_terms, stop_tol);
        e = real.expansion;
        *os << "# nicf x=" << format_double(x) << "\n";
        *os << "i,a,eps,remainder\n";
        for (std::size_t i = 0; i < e.pairs.size(); ++i)
            *os << i << ',' << e.pairs[i].a << ',' << e.pairs[i].eps << ','
                << format_double(real.remainders[i]) << "\n";
        if (real.rational_detected) *os << "# rational-detected\n";
    } else {
        mpz_class pp, qq;
        try {
            pp = mpz_class(p);
            qq = mpz_class(q);
        } catch (const std::invalid_argument&) {
            throw ValidationError("--p/--q must be integers");
        }
        require(qq > 0 && pp >= 0 && pp < qq, "need 0 <= p/q < 1");
        const bruno::Rational r(pp, qq);
        e = bruno::nicf_expand_rational(r);
        *os << "# nicf p/q=" << r.str() << "\n";
        *os << "i,a,eps\n";
        for (std::size_t i = 0; i < e.pairs.size(); ++i)
            *os << i << ',' << e.pairs[i].a << ',' << e.pairs[i].eps << "\n";
    }
    const auto table = bruno::convergents(e);
    *os << "n,p_n,q_n\n";
    for (std::ptrdiff_t n = 0; n <= table.max_index(); ++n)
        *os << n << ',' << table.at(n).first.get_str() << ',' << table.at(n).second.get_str()
            << "\n";
    return 0;
}

// ---- farey / monoid ----------------------------------------------------

int cmd_farey(std::int64_t n, const std::string& out_path) {
    require(n >= 1, "--n must be >= 1");
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file = open_out(out_path);
        os = &file;
    }
    *os << "# config farey n=" << n << "\np,q\n";
    bruno::farey_each(n, [&](std::int64_t p, std::int64_t q) { *os << p << ',' << q << "\n"; });
    return 0;
}

int cmd_monoid(const CutoffOpts& cut, const std::string& out_path) {
    const auto cfg = cut.config();
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file = open_out(out_path);
        os = &file;
    }
    *os << "# config monoid " << cut.fingerprint() << "\na,b,c,d,type\n";
    for (std::int64_t q = 2; q <= cfg.n_max; ++q) {
        for (std::int64_t p = 1; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            const bruno::Rational r(p, q);
            const auto t = bruno::matrix_T(r, false);
            *os << t.a << ',' << t.b << ',' << t.c << ',' << t.d << ",T\n";
            const auto [s, in_ms] = bruno::matrix_S(r, false);
            if (in_ms) *os << s.a << ',' << s.b << ',' << s.c << ',' << s.d << ",S\n";
        }
    }
    return 0;
}

// ---- bruno / yoccoz grids ----------------------------------------------

int cmd_bruno(double t, int points, double x_lo, double x_hi, const CutoffOpts& cut,
              const std::string& out_path, int threads) {
    require(t > 0.0, "--t must be positive");
    require(points >= 2, "--points must be >= 2");
    require(x_hi > x_lo, "empty x range");
    const auto cfg = cut.config();
    const auto table = bruno::build_table(cfg, threads);
    const auto rows = bruno::bruno_grid(t, x_lo, x_hi, points, table, cfg, threads);
    std::ostringstream fp;
    fp << "bruno t=" << format_double(t) << " points=" << points
       << " x_lo=" << format_double(x_lo) << " x_hi=" << format_double(x_hi) << ' '
       << cut.fingerprint();
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file = open_out(out_path);
        os = &file;
    }
    bruno::write_bruno_csv(*os, rows, fp.str());
    return 0;
}

int cmd_yoccoz(double t, int points, const BudgetOpts& bud, const std::string& out_path,
               int threads) {
    require(t > 0.0, "--t must be positive");
    require(points >= 16, "--points must be >= 16");
    const auto values = bruno::log_u_unwrapped(t, points, bud.budget(), threads);
    std::ostringstream fp;
    fp << "yoccoz t=" << format_double(t) << " points=" << points << ' ' << bud.fingerprint();
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file = open_out(out_path);
        os = &file;
    }
    bruno::write_logu_csv(*os, t, values, fp.str());
    return 0;
}

// ---- hgrid + cache -----------------------------------------------------

std::string hgrid_fingerprint(double t, int points, const CutoffOpts& cut,
                              const BudgetOpts& bud) {
    std::ostringstream fp;
    fp << "hgrid t=" << format_double(t) << " points=" << points << ' ' << cut.fingerprint()
       << ' ' << bud.fingerprint();
    return fp.str();
}

std::vector<bruno::HSample> resolve_h_grid(double t, int points, const CutoffOpts& cut,
                                           const BudgetOpts& bud, const std::string& cache_dir,
                                           bool no_compute, int threads) {
    require(t > 0.0, "--t must be positive");
    require(points >= 16, "--points must be >= 16");
    const std::string fp = hgrid_fingerprint(t, points, cut, bud);
    fs::path cache_file;
    if (!cache_dir.empty()) {
        cache_file = fs::path(cache_dir) / ("hgrid_" + bruno::fingerprint_digest(fp) + ".csv");
        if (auto cached = bruno::read_h_csv(cache_file); cached && cached->fingerprint == fp)
            return std::move(cached->samples);
    }
    require(!no_compute, "no usable cached grid and --no-compute was given");
    const auto cfg = cut.config();
    const auto table = bruno::build_table(cfg, threads);
    auto samples = bruno::h_grid(t, points, bud.budget(), table, cfg, threads);
    if (!cache_dir.empty()) {
        fs::create_directories(cache_dir);
        std::ofstream f(cache_file, std::ios::binary);
        if (f.good()) bruno::write_h_csv(f, samples, fp);
    }
    return samples;
}

int cmd_hgrid(double t, int points, const CutoffOpts& cut, const BudgetOpts& bud,
              const std::string& cache_dir, bool no_compute, const std::string& out_path,
              int threads) {
    const auto samples = resolve_h_grid(t, points, cut, bud, cache_dir, no_compute, threads);
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file = open_out(out_path);
        os = &file;
    }
    bruno::write_h_csv(*os, samples, hgrid_fingerprint(t, points, cut, bud));
    return 0;
}

int cmd_fourier(double t, int points, const CutoffOpts& cut, const BudgetOpts& bud,
                const std::string& cache_dir, bool no_compute, const std::string& out_path,
                int threads) {
    const auto samples = resolve_h_grid(t, points, cut, bud, cache_dir, no_compute, threads);
    bruno::Spectrum s;
    try {
        s = bruno::fourier_coeffs(samples);
    } catch (const std::domain_error& e) {
        throw ValidationError(e.what());
    }
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file = open_out(out_path);
        os = &file;
    }
    bruno::write_spectrum_csv(*os, s, "fourier " + hgrid_fingerprint(t, points, cut, bud));
    return 0;
}

// ---- holder pipeline ----------------------------------------------------

int cmd_holder(double t0, int points, const CutoffOpts& cut, const BudgetOpts& bud,
               std::vector<int> rs, double a_base, double t_lo, double t_hi, int t_count,
               const std::string& cache_dir, bool no_compute, const std::string& out_path,
               const std::string& data_dir, int threads) {
    require(!rs.empty(), "need at least one --r");
    for (int r : rs) require(r >= 2, "--r must be >= 2");
    require(a_base > 1.0, "--a-base must exceed 1");
    require(t_lo > 0.0 && t_hi > t_lo, "bad CLP t range");
    require(t_count >= 10, "need at least 10 CLP t values");
    require(t_lo >= 10.0 * t0, "CLP t range must start at or above 10*t0");

    const auto samples = resolve_h_grid(t0, points, cut, bud, cache_dir, no_compute, threads);
    bruno::Spectrum spec;
    try {
        spec = bruno::fourier_coeffs(samples);
    } catch (const std::domain_error& e) {
        throw ValidationError(e.what());
    }

    const auto ts = bruno::log_spaced(t_lo, t_hi, t_count);
    std::vector<bruno::ClpResult> clp;
    clp.reserve(rs.size());
    for (int r : rs) clp.push_back(bruno::clp_estimate(spec, r, ts));

    const int m_max = bruno::dlp_max_block(spec, a_base);
    const int m_lo = m_max / 3 + 1;  // regression on "large M"
    const auto dlp = bruno::dlp_estimate(spec, a_base, m_lo, m_max);

    // pooled estimate: mean value of the union of the CLP intervals
    double lo = clp[0].eta - clp[0].eta_stderr, hi = clp[0].eta + clp[0].eta_stderr;
    for (const auto& c : clp) {
        lo = std::min(lo, c.eta - c.eta_stderr);
        hi = std::max(hi, c.eta + c.eta_stderr);
    }

    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file = open_out(out_path);
        os = &file;
    }
    *os << "# holder " << hgrid_fingerprint(t0, points, cut, bud) << "\n";
    *os << "points=" << points << "\n";
    *os << "t0=" << format_double(t0) << "\n";
    *os << "residual_imag=" << format_double(spec.residual_imag) << "\n";
    for (std::size_t i = 0; i < rs.size(); ++i) {
        *os << "eta_clp_r" << rs[i] << '=' << format_double(clp[i].eta) << "\n";
        *os << "eta_clp_r" << rs[i] << "_stderr=" << format_double(clp[i].eta_stderr) << "\n";
    }
    *os << "eta_clp_pooled=" << format_double(0.5 * (lo + hi)) << "\n";
    *os << "eta_clp_pooled_err=" << format_double(0.5 * (hi - lo)) << "\n";
    *os << "eta_dlp=" << format_double(dlp.eta) << "\n";
    *os << "eta_dlp_stderr=" << format_double(dlp.eta_stderr) << "\n";
    *os << "c_dlp=" << format_double(dlp.c) << "\n";
    *os << "c_dlp_stderr=" << format_double(dlp.fit.intercept_stderr) << "\n";

    if (!data_dir.empty()) {
        fs::create_directories(data_dir);
        for (std::size_t i = 0; i < rs.size(); ++i) {
            std::vector<double> xs, ys;
            for (double t : ts) {
                xs.push_back(std::log(t + spec.t0));
                ys.push_back(std::log(bruno::poisson_deriv_supnorm(spec, rs[i], t)));
            }
            std::ofstream f(fs::path(data_dir) / ("clp_r" + std::to_string(rs[i]) + ".csv"),
                            std::ios::binary);
            bruno::write_xy_csv(f, "log_t,log_supnorm", xs, ys,
                                "clp r=" + std::to_string(rs[i]));
        }
        std::vector<double> xs, ys;
        for (int m : dlp.used_blocks) {
            xs.push_back(m);
            ys.push_back(std::log(bruno::dyadic_block_supnorm(spec, m, a_base)) /
                         std::log(a_base));
        }
        std::ofstream f(fs::path(data_dir) / "dlp.csv", std::ios::binary);
        bruno::write_xy_csv(f, "M,logA_supnorm", xs, ys, "dlp");
    }
    return 0;
}

// ---- appendix -----------------------------------------------------------

int cmd_appendix(const std::string& out_dir, double study_t, int grid_points, double jump_t,
                 double jump_delta, int jump_nmax, int threads) {
    require(study_t > 0.0, "--t must be positive");
    require(grid_points >= 10, "--points must be >= 10");
    require(jump_t > 0.0 && jump_delta > 0.0, "bad jump parameters");
    fs::create_directories(out_dir);

    const bruno::CutoffConfig ref{101, 80, 20, 20};
    const auto table_ref = bruno::build_table(ref, threads);

    {  // cut-off sensitivity table
        std::vector<C> grid;
        grid.reserve(static_cast<std::size_t>(grid_points));
        for (int i = 0; i < grid_points; ++i)
            grid.emplace_back(0.5 * i / (grid_points - 1), study_t);
        std::ofstream f(fs::path(out_dir) / "table_a1.csv", std::ios::binary);
        f << "# config appendix-a1 t=" << format_double(study_t) << " points=" << grid_points
          << " ref=101/80/20/20\n";
        f << "parameter,value,log10_mean_rel_err\n";
        const auto emit = [&](const char* name, bruno::CutoffParam p, std::vector<int> vals) {
            const auto means = bruno::cutoff_study(p, vals, ref, grid, table_ref, threads);
            for (std::size_t i = 0; i < vals.size(); ++i)
                f << name << ',' << vals[i] << ',' << format_double(std::log10(means[i])) << "\n";
        };
        emit("n_max", bruno::CutoffParam::n_max, {41, 61, 83});
        emit("k1", bruno::CutoffParam::k1, {20, 40, 60});
        emit("k2", bruno::CutoffParam::k2, {10, 15});
    }

    {  // jump table
        const bruno::CutoffConfig cfg{jump_nmax, 80, 20, 20};
        const auto table = bruno::build_table(cfg, threads);
        std::ofstream f(fs::path(out_dir) / "table_a2.csv", std::ios::binary);
        f << "# config appendix-a2 t=" << format_double(jump_t)
          << " delta=" << format_double(jump_delta) << " nmax=" << jump_nmax << "\n";
        f << "p,q,jump,jump_minus_pi_over_q\n";
        const std::pair<int, int> fracs[] = {{0, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 5}};
        for (auto [p, q] : fracs) {
            const double j =
                bruno::jump_at(bruno::Rational(p, q), jump_t, jump_delta, table, cfg);
            f << p << ',' << q << ',' << format_double(j) << ','
              << format_double(j - std::numbers::pi / q) << "\n";
        }
    }

    {  // boundary convergence series
        std::ofstream f(fs::path(out_dir) / "fig_a2.csv", std::ios::binary);
        f << "# config appendix-fig-a2 nmax=101 k1=80 k2=20\n";
        f << "x,t,abs_im_b_minus_b_half\n";
        const double golden = (std::sqrt(5.0) + 1.0) / 2.0;
        for (double x : {2.0 - golden, std::sqrt(2.0) - 1.0}) {
            const double bh = bruno::bruno_real(x);
            for (int e = 2; e <= 7; ++e) {
                const double t = std::pow(10.0, -e);
                const double err =
                    std::abs(bruno::bruno_complex(C(x, t), table_ref, ref).imag() - bh);
                f << format_double(x) << ',' << format_double(t) << ',' << format_double(err)
                  << "\n";
            }
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"1/2-complex Bruno function, Yoccoz function and Holder-exponent estimation"};
    app.require_subcommand(1);
    app.set_config("--seed-config", "", "key=value file with option defaults");

    int threads = 0;
    app.add_option("--threads", threads, "worker threads (0 = all cores)")->capture_default_str();

    // cf
    auto* cf = app.add_subcommand("cf", "nearest-integer continued fraction expansion");
    std::string cf_p = "0", cf_q = "1";
    double cf_x = 0.0;
    int cf_max_terms = 30;
    double cf_stop_tol = 1e-12;
    std::string cf_out;
    cf->add_option("--p", cf_p, "numerator");
    cf->add_option("--q", cf_q, "denominator");
    auto* cf_x_opt = cf->add_option("--x", cf_x, "real input in [0,1)");
    cf->add_option("--max-terms", cf_max_terms, "maximum partial quotients for --x");
    cf->add_option("--stop-tol", cf_stop_tol, "remainder stopping tolerance for --x");
    cf->add_option("--out", cf_out, "output file (default stdout)");

    // farey
    auto* fa = app.add_subcommand("farey", "Farey series as p,q rows");
    std::int64_t fa_n = 5;
    std::string fa_out;
    fa->add_option("--n", fa_n, "order");
    fa->add_option("--out", fa_out, "output file (default stdout)");

    // monoid
    auto* mo = app.add_subcommand("monoid", "monoid matrices of the table as a,b,c,d,type rows");
    CutoffOpts mo_cut;
    mo_cut.attach(mo);
    std::string mo_out;
    mo->add_option("--out", mo_out, "output file (default stdout)");

    // bruno
    auto* br = app.add_subcommand("bruno", "complex Bruno function on an x grid");
    double br_t = 1e-3, br_xlo = 0.0, br_xhi = 0.5;
    int br_points = 10000;
    CutoffOpts br_cut;
    std::string br_out;
    br->add_option("--t", br_t, "height Im z");
    br->add_option("--points", br_points, "grid points");
    br->add_option("--x-lo", br_xlo, "left end of the x grid");
    br->add_option("--x-hi", br_xhi, "right end of the x grid");
    br_cut.attach(br);
    br->add_option("--out", br_out, "output file (default stdout)");

    // yoccoz
    auto* yo = app.add_subcommand("yoccoz", "log U(e^{2 pi i (x+it)}) on an x grid");
    double yo_t = 1e-3;
    int yo_points = 10000;
    BudgetOpts yo_bud;
    std::string yo_out;
    yo->add_option("--t", yo_t, "height Im z");
    yo->add_option("--points", yo_points, "grid points");
    yo_bud.attach(yo);
    yo->add_option("--out", yo_out, "output file (default stdout)");

    // hgrid
    auto* hg = app.add_subcommand("hgrid", "H = log U - iB on the periodic grid");
    double hg_t = 1e-5;
    int hg_points = 8192;
    CutoffOpts hg_cut{101, 40, 20, 20};
    BudgetOpts hg_bud;
    std::string hg_cache, hg_out;
    bool hg_nocompute = false;
    hg->add_option("--t", hg_t, "sampling height t0");
    hg->add_option("--points", hg_points, "grid points");
    hg_cut.attach(hg);
    hg_bud.attach(hg);
    hg->add_option("--cache", hg_cache, "cache directory for resumable runs");
    hg->add_flag("--no-compute", hg_nocompute, "fail instead of recomputing on cache miss");
    hg->add_option("--out", hg_out, "output file (default stdout)");

    // fourier
    auto* fo = app.add_subcommand("fourier", "one-sided Fourier coefficients of the H grid");
    double fo_t = 1e-5;
    int fo_points = 8192;
    CutoffOpts fo_cut{101, 40, 20, 20};
    BudgetOpts fo_bud;
    std::string fo_cache, fo_out;
    bool fo_nocompute = false;
    fo->add_option("--t", fo_t, "sampling height t0");
    fo->add_option("--points", fo_points, "grid points (power of two >= 1024)");
    fo_cut.attach(fo);
    fo_bud.attach(fo);
    fo->add_option("--cache", fo_cache, "cache directory");
    fo->add_flag("--no-compute", fo_nocompute, "fail instead of recomputing on cache miss");
    fo->add_option("--out", fo_out, "output file (default stdout)");

    // holder
    auto* ho = app.add_subcommand("holder", "full Holder-exponent pipeline");
    double ho_t0 = 1e-5;
    int ho_points = 8192;
    CutoffOpts ho_cut{101, 40, 20, 20};
    BudgetOpts ho_bud;
    std::vector<int> ho_rs = {2, 3, 4};
    double ho_a = 1.25, ho_tlo = 1e-3, ho_thi = 1e-1;
    int ho_tcount = 100;
    std::string ho_cache, ho_out, ho_data;
    bool ho_nocompute = false;
    ho->add_option("--t0", ho_t0, "sampling height of the H grid");
    ho->add_option("--points", ho_points, "grid points (power of two >= 1024)");
    ho_cut.attach(ho);
    ho_bud.attach(ho);
    ho->add_option("--r", ho_rs, "Poisson derivative orders");
    ho->add_option("--a-base", ho_a, "dyadic block base A");
    ho->add_option("--t-lo", ho_tlo, "smallest CLP height");
    ho->add_option("--t-hi", ho_thi, "largest CLP height");
    ho->add_option("--t-count", ho_tcount, "number of CLP heights");
    ho->add_option("--cache", ho_cache, "cache directory");
    ho->add_flag("--no-compute", ho_nocompute, "fail instead of recomputing on cache miss");
    ho->add_option("--out", ho_out, "report file (default stdout)");
    ho->add_option("--data-dir", ho_data, "directory for regression data CSVs");

    // appendix
    auto* ap = app.add_subcommand("appendix", "cut-off study, jump table, boundary convergence");
    std::string ap_dir = ".";
    double ap_t = 1e-4, ap_jt = 1e-7, ap_jd = 1e-4;
    int ap_points = 500, ap_jnmax = 151;
    ap->add_option("--out-dir", ap_dir, "output directory");
    ap->add_option("--t", ap_t, "height of the cut-off study grid");
    ap->add_option("--points", ap_points, "cut-off study grid points");
    ap->add_option("--jump-t", ap_jt, "height for the jump table");
    ap->add_option("--delta", ap_jd, "half-offset delta for the jump table");
    ap->add_option("--jump-nmax", ap_jnmax, "Farey order for the jump table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitValidation;
    }

    try {
        if (cf->parsed())
            return cmd_cf(cf_p, cf_q, cf_x, cf_x_opt->count() > 0, cf_max_terms, cf_stop_tol,
                          cf_out);
        if (fa->parsed()) return cmd_farey(fa_n, fa_out);
        if (mo->parsed()) return cmd_monoid(mo_cut, mo_out);
        if (br->parsed())
            return cmd_bruno(br_t, br_points, br_xlo, br_xhi, br_cut, br_out, threads);
        if (yo->parsed()) return cmd_yoccoz(yo_t, yo_points, yo_bud, yo_out, threads);
        if (hg->parsed())
            return cmd_hgrid(hg_t, hg_points, hg_cut, hg_bud, hg_cache, hg_nocompute, hg_out,
                             threads);
        if (fo->parsed())
            return cmd_fourier(fo_t, fo_points, fo_cut, fo_bud, fo_cache, fo_nocompute, fo_out,
                               threads);
        if (ho->parsed())
            return cmd_holder(ho_t0, ho_points, ho_cut, ho_bud, ho_rs, ho_a, ho_tlo, ho_thi,
                              ho_tcount, ho_cache, ho_nocompute, ho_out, ho_data, threads);
        if (ap->parsed())
            return cmd_appendix(ap_dir, ap_t, ap_points, ap_jt, ap_jd, ap_jnmax, threads);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return kExitNumeric;
    }
    return 0;
}
