#include "qgon/rational.hpp"

namespace qgon {

BigRational::BigRational(long num, long den) {
    if (den == 0) throw DivideByZeroError("rational with zero denominator");
    v_ = mpq_class(num, den);
    mpq_canonicalize(v_.get_mpq_t());
}

BigRational::BigRational(mpz_class num, mpz_class den) {
    if (den == 0) throw DivideByZeroError("rational with zero denominator");
    v_ = mpq_class(std::move(num), std::move(den));
    mpq_canonicalize(v_.get_mpq_t());
}

BigRational& BigRational::operator/=(const BigRational& o) {
    if (o.is_zero()) throw DivideByZeroError("division of rationals by zero");
    v_ /= o.v_;
    return *this;
}

BigRational BigRational::inverse() const {
    if (is_zero()) throw DivideByZeroError("inverse of zero rational");
    return BigRational(mpq_class(1) / v_);
}

BigRational BigRational::pow(unsigned long e) const {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), e);
    return BigRational(mpq_class(n, d));
}

}  // namespace qgon
