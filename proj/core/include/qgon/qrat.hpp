#pragma once

#include <string>
#include <utility>

#include "qgon/qpoly.hpp"

namespace qgon {

// Element of Q(q), kept normalized: gcd(num, den) = 1, den monic and nonzero.
// Equality is structural on the normalized representation.
class QRat {
  public:
    QRat() : num_(), den_(1) {}
    QRat(long c) : num_(c), den_(1) {}
    QRat(BigRational c) : num_(std::move(c)), den_(1) {}
    QRat(QPoly num) : num_(std::move(num)), den_(1) {}
    QRat(QPoly num, QPoly den);

    static QRat q(std::size_t power = 1) { return QRat(QPoly::q(power)); }

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    QRat operator-() const;
    QRat& operator+=(const QRat& o) { return *this = *this + o; }
    QRat& operator-=(const QRat& o) { return *this = *this - o; }
    QRat& operator*=(const QRat& o) { return *this = *this * o; }
    QRat& operator/=(const QRat& o) { return *this = *this / o; }

    friend QRat operator+(const QRat& a, const QRat& b);
    friend QRat operator-(const QRat& a, const QRat& b);
    friend QRat operator*(const QRat& a, const QRat& b);
    friend QRat operator/(const QRat& a, const QRat& b);

    friend bool operator==(const QRat& a, const QRat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const QRat& a, const QRat& b) { return !(a == b); }

    QRat inverse() const;
    QRat pow(unsigned e) const;

    // Exact evaluation at q = q0; PoleError if the normalized denominator
    // vanishes there.
    BigRational evaluate(const BigRational& q0) const;

    // "(num)/(den)", or just "num" when den = 1.
    std::string to_string() const;

  private:
    void normalize();
    QPoly num_, den_;
};

}  // namespace qgon
