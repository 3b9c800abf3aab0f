#include "qgon/qpoly.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "qgon/errors.hpp"

namespace qgon {

namespace {

const BigRational kZero{};

// Integer polynomial helpers for the gcd.  Coefficients ascend by degree and
// the leading entry is nonzero.
using ZPoly = std::vector<mpz_class>;

void ztrim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

mpz_class zcontent(const ZPoly& p) {
    mpz_class g = 0;
    for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;  // 0 only for the zero polynomial
}

void zmake_primitive(ZPoly& p) {
    mpz_class g = zcontent(p);
    if (g == 0 || g == 1) return;
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// Pseudo-remainder of a by b: rem(lc(b)^(deg a - deg b + 1) * a, b), which
// stays integral. Requires deg a >= deg b >= 0.
ZPoly zpseudo_rem(ZPoly a, const ZPoly& b) {
    const auto db = b.size() - 1;
    const mpz_class& lb = b.back();
    while (a.size() >= b.size()) {
        const auto da = a.size() - 1;
        mpz_class lead = a.back();
        for (auto& c : a) c *= lb;
        for (std::size_t i = 0; i <= db; ++i) a[da - db + i] -= lead * b[i];
        ztrim(a);
        if (a.empty()) break;
    }
    return a;
}

// Clear denominators and the integer content.
ZPoly to_primitive_z(const QPoly& p) {
    mpz_class den_lcm = 1;
    for (const auto& c : p.coeffs())
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
    ZPoly out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs())
        out.push_back(c.numerator() * (den_lcm / c.denominator()));
    zmake_primitive(out);
    return out;
}

QPoly monic_from_z(const ZPoly& p) {
    if (p.empty()) return QPoly{};
    std::vector<BigRational> c;
    c.reserve(p.size());
    const mpz_class& lead = p.back();
    for (const auto& z : p) c.emplace_back(z, lead);
    return QPoly(std::move(c));
}

}  // namespace

QPoly::QPoly(BigRational c) {
    if (!c.is_zero()) c_.push_back(std::move(c));
}

QPoly::QPoly(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::monomial(BigRational c, std::size_t power) {
    if (c.is_zero()) return QPoly{};
    std::vector<BigRational> v(power + 1);
    v[power] = std::move(c);
    return QPoly(std::move(v));
}

void QPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const BigRational& QPoly::coeff(std::size_t k) const {
    return k < c_.size() ? c_[k] : kZero;
}

const BigRational& QPoly::leading() const {
    if (c_.empty()) throw InternalError("leading coefficient of zero polynomial");
    return c_.back();
}

QPoly QPoly::operator-() const {
    QPoly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly{};
    std::vector<BigRational> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            out[i + j] += a.c_[i] * b.c_[j];
    }
    return QPoly(std::move(out));
}

QPoly& QPoly::operator*=(const QPoly& o) { return *this = *this * o; }

QPoly& QPoly::operator*=(const BigRational& s) {
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

QPoly QPoly::pow(unsigned e) const {
    QPoly base(*this), r(1);
    while (e) {
        if (e & 1u) r *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return r;
}

BigRational QPoly::evaluate(const BigRational& q0) const {
    BigRational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q0 + *it;
    return acc;
}

void QPoly::divmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem) {
    if (b.is_zero()) throw DivideByZeroError("polynomial division by zero");
    quot = QPoly{};
    rem = a;
    const BigRational lb_inv = b.leading().inverse();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        const std::size_t shift = static_cast<std::size_t>(rem.degree() - b.degree());
        const BigRational factor = rem.leading() * lb_inv;
        quot += QPoly::monomial(factor, shift);
        rem -= QPoly::monomial(factor, shift) * b;
    }
}

QPoly QPoly::divide_exact(const QPoly& a, const QPoly& b) {
    QPoly q, r;
    divmod(a, b, q, r);
    if (!r.is_zero())
        throw InternalError("exact polynomial division left remainder " + r.to_string());
    return q;
}

QPoly QPoly::gcd(const QPoly& a, const QPoly& b) {
    if (a.is_zero() && b.is_zero()) return QPoly{};
    if (a.is_zero()) return monic_from_z(to_primitive_z(b));
    if (b.is_zero()) return monic_from_z(to_primitive_z(a));
    if (a.is_constant() || b.is_constant()) return QPoly(1);

    ZPoly u = to_primitive_z(a);
    ZPoly v = to_primitive_z(b);
    if (u.size() < v.size()) std::swap(u, v);
    while (!v.empty()) {
        ZPoly r = zpseudo_rem(u, v);
        zmake_primitive(r);
        u = std::move(v);
        v = std::move(r);
    }
    return monic_from_z(u);
}

std::string QPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        const BigRational& c = c_[k];
        if (c.is_zero()) continue;
        const bool neg = c.sign() < 0;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        const BigRational mag = neg ? -c : c;
        if (k == 0) {
            out << mag.to_string();
        } else {
            if (!mag.is_one()) out << mag.to_string() << "*";
            out << "q";
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

}  // namespace qgon
