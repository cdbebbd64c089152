#include "bruno/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace bruno {

Rational::Rational(mpz_class num, mpz_class den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den_ < 0) {
        den_ = -den_;
        num_ = -num_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

double Rational::to_double() const {
    return mpq_class(num_, den_).get_d();
}

std::string Rational::str() const {
    return num_.get_str() + "/" + den_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace bruno
