#pragma once

#include <gmpxx.h>

#include <string>

#include "qgon/errors.hpp"

namespace qgon {

// Arbitrary-precision rational number. Always canonical:
// gcd(|num|, den) = 1, den >= 1, zero is 0/1.
class BigRational {
  public:
    BigRational() : v_(0) {}
    BigRational(long n) : v_(static_cast<signed long>(n)) {}
    BigRational(long num, long den);
    BigRational(mpz_class num, mpz_class den);
    explicit BigRational(mpq_class v) : v_(std::move(v)) { mpq_canonicalize(v_.get_mpq_t()); }

    static BigRational from_integer(const mpz_class& z) { return BigRational(mpq_class(z)); }

    const mpq_class& value() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    BigRational operator-() const { return BigRational(mpq_class(-v_)); }
    BigRational& operator+=(const BigRational& o) { v_ += o.v_; return *this; }
    BigRational& operator-=(const BigRational& o) { v_ -= o.v_; return *this; }
    BigRational& operator*=(const BigRational& o) { v_ *= o.v_; return *this; }
    BigRational& operator/=(const BigRational& o);

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const BigRational& a, const BigRational& b) { return a.v_ != b.v_; }
    friend bool operator<(const BigRational& a, const BigRational& b) { return a.v_ < b.v_; }

    BigRational inverse() const;
    BigRational pow(unsigned long e) const;

    // "p" when integral, "p/r" otherwise; '-' prefix on the numerator.
    std::string to_string() const { return v_.get_str(); }

  private:
    mpq_class v_;
};

}  // namespace qgon
