#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qgon/rational.hpp"

namespace qgon {

// Dense polynomial in the formal variable q with BigRational coefficients,
// indexed by ascending degree. The zero polynomial has an empty coefficient
// vector; otherwise the trailing coefficient is nonzero.
class QPoly {
  public:
    QPoly() = default;
    QPoly(long c) : QPoly(BigRational(c)) {}
    QPoly(BigRational c);
    explicit QPoly(std::vector<BigRational> coeffs);

    static QPoly q(std::size_t power = 1) { return monomial(BigRational(1), power); }
    static QPoly monomial(BigRational c, std::size_t power);

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_constant() const { return c_.size() <= 1; }

    // Zero beyond the degree.
    const BigRational& coeff(std::size_t k) const;
    const BigRational& leading() const;
    const std::vector<BigRational>& coeffs() const { return c_; }

    QPoly operator-() const;
    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    QPoly& operator*=(const QPoly& o);
    QPoly& operator*=(const BigRational& s);

    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend QPoly operator*(QPoly a, const BigRational& s) { return a *= s; }
    friend QPoly operator*(const BigRational& s, QPoly a) { return a *= s; }

    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

    QPoly pow(unsigned e) const;
    BigRational evaluate(const BigRational& q0) const;

    // Quotient and remainder of field long division in Q[q]; b must be nonzero.
    static void divmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem);
    // Quotient when the division is known to be exact; throws InternalError on
    // a nonzero remainder.
    static QPoly divide_exact(const QPoly& a, const QPoly& b);
    // Monic gcd (primitive pseudo-remainder sequence over Z under the hood).
    // gcd(0, 0) = 0.
    static QPoly gcd(const QPoly& a, const QPoly& b);

    // Canonical form "c0 + c1*q + c2*q^2 + ..." with rational coefficients
    // "p/r"; unit coefficients elided on nonconstant terms; "0" for zero.
    std::string to_string() const;

  private:
    void trim();
    std::vector<BigRational> c_;
};

}  // namespace qgon
