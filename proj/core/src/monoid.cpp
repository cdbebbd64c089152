#include "bruno/monoid.hpp"

#include <stdexcept>

#include "bruno/nicf.hpp"

namespace bruno {

namespace {

mpz_class to_mpz(std::int64_t v) { return mpz_class(static_cast<long>(v)); }

std::int64_t to_i64(const mpz_class& v, const char* what) {
    if (!v.fits_slong_p()) throw std::overflow_error(std::string(what) + ": entry exceeds int64");
    return v.get_si();
}

GeneratorWord word_T_letters(const NicfExpansion& e) {
    // eps0 g(a1^) eps1 g(a2^) ... eps_{nbar-1} g(a_nbar), where
    // (a_i^, eps_i^) = (a_i, 1) if eps_i = +1 and (a_i - 1, sigma) if eps_i = -1.
    const std::size_t nbar = e.length();
    GeneratorWord w;
    w.reserve(nbar);
    for (std::size_t i = 1; i <= nbar; ++i) {
        const bool sig = e.pairs[i - 1].eps < 0;
        std::int64_t m = e.pairs[i].a;
        if (i < nbar && e.pairs[i].eps < 0) m -= 1;
        w.push_back({sig, m});
    }
    return w;
}

}  // namespace

MonoidMatrix word_product(const GeneratorWord& w) {
    // letter (sigma?, m): g(m) = (0 1; 1 m), sigma*g(m) = (1 m-1; 1 m)
    MonoidMatrix g{1, 0, 0, 1, std::nullopt};
    for (const GeneratorLetter& l : w) {
        const std::int64_t la = l.sigma ? 1 : 0;
        const std::int64_t lb = l.sigma ? l.m - 1 : 1;
        const std::int64_t lc = 1;
        const std::int64_t ld = l.m;
        g = MonoidMatrix{g.a * la + g.b * lc, g.a * lb + g.b * ld,
                         g.c * la + g.d * lc, g.c * lb + g.d * ld, std::nullopt};
    }
    g.word = w;
    return g;
}

MonoidMatrix matrix_T(const Rational& r, bool with_word) {
    if (r.num() <= 0 || r.num() >= r.den())
        throw std::invalid_argument("matrix_T: fraction must lie in (0,1)");
    const NicfExpansion e = nicf_expand_rational(r);
    const ConvergentTable c = convergents(e);
    const auto& [pt, qt] = c.at(c.max_index() - 1);
    MonoidMatrix g{to_i64(pt, "matrix_T"), to_i64(r.num(), "matrix_T"),
                   to_i64(qt, "matrix_T"), to_i64(r.den(), "matrix_T"), std::nullopt};
    if (with_word) g.word = word_T_letters(e);
    return g;
}

MatrixSResult matrix_S(const Rational& r, bool with_word) {
    if (r.num() <= 0 || r.num() >= r.den())
        throw std::invalid_argument("matrix_S: fraction must lie in (0,1)");
    const NicfExpansion e = nicf_expand_rational(r);
    const ConvergentTable c = convergents(e);
    const auto& [pt, qt] = c.at(c.max_index() - 1);
    MonoidMatrix g{to_i64(mpz_class(r.num() - pt), "matrix_S"), to_i64(r.num(), "matrix_S"),
                   to_i64(mpz_class(r.den() - qt), "matrix_S"), to_i64(r.den(), "matrix_S"),
                   std::nullopt};
    const bool in_ms = e.pairs.back().a == 2;
    if (with_word && in_ms) {
        // ... g(a^_{nbar-1}) g(1) g(1) = ... g(a^_{nbar-1}) sigma g(2)
        GeneratorWord w = word_T_letters(e);
        w.back() = GeneratorLetter{true, 2};
        g.word = std::move(w);
    }
    return {std::move(g), in_ms};
}

bool is_in_monoid(const MonoidMatrix& g) {
    const std::int64_t det = g.det();
    if (det != 1 && det != -1) throw std::invalid_argument("is_in_monoid: determinant not +-1");
    if (!(g.d >= g.b && g.b > 0)) return false;
    if (!(g.c >= g.a && g.a >= 0)) return false;
    if (g.c == 0) return true;
    const std::int64_t s = 2 * g.d - g.c;
    return s > 0 && s * s >= 5 * g.c * g.c;
}

GeneratorWord monoid_word(const MonoidMatrix& g) {
    if (!is_in_monoid(g)) throw std::domain_error("monoid_word: not-in-monoid");
    const Rational frac(to_mpz(g.b), to_mpz(g.d));

    MonoidMatrix t = matrix_T(frac, true);
    if (t == g) return *t.word;
    MatrixSResult s = matrix_S(frac, true);
    if (s.in_ms && s.matrix == g) return *s.matrix.word;
    throw std::domain_error("monoid_word: not-in-monoid");
}

}  // namespace bruno
