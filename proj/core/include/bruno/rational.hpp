#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace bruno {

/// Reduced fraction p/q with q >= 1; the sign lives in the numerator.
/// Construction from any integer pair divides out the gcd and normalizes
/// the sign into the denominator. Denominator zero is rejected.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(mpz_class num, mpz_class den);
    Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

    const mpz_class& num() const { return num_; }
    const mpz_class& den() const { return den_; }

    double to_double() const;
    std::string str() const;  // "p/q"

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

private:
    mpz_class num_;
    mpz_class den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace bruno
