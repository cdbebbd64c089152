#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bruno/rational.hpp"

namespace bruno {

/// One word letter: the matrix (sigma ? s : 1) * g(m), where
/// g(m) = (0 1; 1 m) and s = (-1 1; 0 1).
struct GeneratorLetter {
    bool sigma;
    std::int64_t m;

    friend bool operator==(const GeneratorLetter& x, const GeneratorLetter& y) {
        return x.sigma == y.sigma && x.m == y.m;
    }
};

using GeneratorWord = std::vector<GeneratorLetter>;

/// Element of GL(2,Z) with columns (a,c) and (b,d). For members of the
/// 1/2-monoid the characterization d >= b > 0, c >= a >= 0, d >= G*c
/// holds with G the golden ratio.
struct MonoidMatrix {
    std::int64_t a, b, c, d;
    std::optional<GeneratorWord> word;

    std::int64_t det() const { return a * d - b * c; }

    friend bool operator==(const MonoidMatrix& x, const MonoidMatrix& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
};

/// Multiplies a generator word out to its matrix.
MonoidMatrix word_product(const GeneratorWord& w);

/// Type-T matrix (p_T p; q_T q) of a fraction 0 < p/q < 1, with the
/// generator word read off the NICF expansion.
MonoidMatrix matrix_T(const Rational& r, bool with_word = true);

struct MatrixSResult {
    MonoidMatrix matrix;  // (p_S p; q_S q)
    bool in_ms;           // true iff the NICF of p/q ends with (2,+1)
};

/// Type-S matrix of a fraction; it belongs to the monoid exactly when the
/// expansion ends with (2,+1) (equivalently q >= G*q_S). The word is only
/// attached in that case, rewritten to end with sigma*g(2).
MatrixSResult matrix_S(const Rational& r, bool with_word = true);

/// Exact membership test d >= b > 0, c >= a >= 0, d >= G*c (the last
/// checked as (2d-c)^2 >= 5c^2 to avoid floating-point boundaries).
/// Requires det = +-1.
bool is_in_monoid(const MonoidMatrix& g);

/// Recovers a generator word whose product is g, by expanding the
/// fraction b/d and trying the type-T and type-S constructions.
/// Throws "not-in-monoid" when neither reproduces g.
GeneratorWord monoid_word(const MonoidMatrix& g);

}  // namespace bruno
