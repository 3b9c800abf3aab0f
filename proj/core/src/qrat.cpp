#include "qgon/qrat.hpp"

#include "qgon/errors.hpp"

namespace qgon {

QRat::QRat(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivideByZeroError("rational function with zero denominator");
    normalize();
}

void QRat::normalize() {
    if (num_.is_zero()) {
        den_ = QPoly(1);
        return;
    }
    if (!den_.is_one()) {
        if (!den_.is_constant()) {
            QPoly g = QPoly::gcd(num_, den_);
            if (!g.is_one()) {
                num_ = QPoly::divide_exact(num_, g);
                den_ = QPoly::divide_exact(den_, g);
            }
        }
        // Monic denominator pins the representative.
        const BigRational lead = den_.leading();
        if (!lead.is_one()) {
            const BigRational inv = lead.inverse();
            num_ *= inv;
            den_ *= inv;
        }
    }
}

QRat QRat::operator-() const {
    QRat r(*this);
    r.num_ = -r.num_;
    return r;
}

QRat operator+(const QRat& a, const QRat& b) {
    if (a.den_ == b.den_) return QRat(a.num_ + b.num_, a.den_);
    return QRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

QRat operator-(const QRat& a, const QRat& b) {
    if (a.den_ == b.den_) return QRat(a.num_ - b.num_, a.den_);
    return QRat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

QRat operator*(const QRat& a, const QRat& b) {
    if (a.den_.is_one() && b.den_.is_one()) return QRat(a.num_ * b.num_);
    return QRat(a.num_ * b.num_, a.den_ * b.den_);
}

QRat operator/(const QRat& a, const QRat& b) {
    if (b.is_zero()) throw DivideByZeroError("division of rational functions by zero");
    return QRat(a.num_ * b.den_, a.den_ * b.num_);
}

QRat QRat::inverse() const {
    if (is_zero()) throw DivideByZeroError("inverse of the zero rational function");
    return QRat(den_, num_);
}

QRat QRat::pow(unsigned e) const {
    QRat base(*this), r(1);
    while (e) {
        if (e & 1u) r *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return r;
}

BigRational QRat::evaluate(const BigRational& q0) const {
    const BigRational d = den_.evaluate(q0);
    if (d.is_zero())
        throw PoleError("pole at q = " + q0.to_string() + ": denominator " +
                        den_.to_string() + " vanishes");
    return num_.evaluate(q0) / d;
}

std::string QRat::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace qgon
