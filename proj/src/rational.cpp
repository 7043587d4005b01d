#include "moebius/rational.hpp"

#include <algorithm>

#include "moebius/error.hpp"

namespace moebius {

namespace {

i128 abs128(i128 v) {
    if (v < 0) {
        if (v == -v) throw PrecisionError("rational: 128-bit minimum has no absolute value");
        return -v;
    }
    return v;
}

}  // namespace

std::string to_string(i128 v) {
    if (v == 0) return "0";
    const bool neg = v < 0;
    u128 u = neg ? u128(0) - u128(v) : u128(v);
    std::string out;
    while (u != 0) {
        out.push_back(char('0' + int(u % 10)));
        u /= 10;
    }
    if (neg) out.push_back('-');
    std::reverse(out.begin(), out.end());
    return out;
}

i128 gcd128(i128 a, i128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

i128 checked_add(i128 a, i128 b) {
    i128 r;
    if (__builtin_add_overflow(a, b, &r)) throw PrecisionError("rational: addition overflow");
    return r;
}

i128 checked_mul(i128 a, i128 b) {
    i128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw PrecisionError("rational: multiplication overflow");
    return r;
}

i128 checked_pow(i128 base, unsigned exp) {
    i128 r = 1;
    for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

Rational::Rational(i128 num) : num_(num), den_(1) {}

Rational::Rational(i128 num, i128 den) {
    if (den == 0) throw DomainError("rational: zero denominator");
    if (den < 0) {
        num = checked_mul(num, -1);
        den = checked_mul(den, -1);
    }
    const i128 g = gcd128(num, den);
    num_ = num / g;
    den_ = den / g;
}

double Rational::to_double() const {
    // Long double keeps the quotient correctly rounded for the sizes we see.
    return double(static_cast<long double>(num_) / static_cast<long double>(den_));
}

std::string Rational::str() const {
    if (den_ == 1) return to_string(num_);
    return to_string(num_) + "/" + to_string(den_);
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = checked_mul(num_, -1);
    r.den_ = den_;
    return r;
}

Rational Rational::reciprocal() const {
    if (num_ == 0) throw DomainError("rational: reciprocal of zero");
    return Rational(den_, num_);
}

Rational operator+(const Rational& a, const Rational& b) {
    const i128 g = gcd128(a.den_, b.den_);
    const i128 da = a.den_ / g;
    const i128 db = b.den_ / g;
    const i128 num = checked_add(checked_mul(a.num_, db), checked_mul(b.num_, da));
    const i128 den = checked_mul(a.den_, db);
    return Rational(num, den);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    const i128 g1 = gcd128(a.num_, b.den_);
    const i128 g2 = gcd128(b.num_, a.den_);
    // Denominators are >= 1, so both gcds are >= 1.
    const i128 n1 = a.num_ / g1;
    const i128 d2 = b.den_ / g1;
    const i128 n2 = b.num_ / g2;
    const i128 d1 = a.den_ / g2;
    Rational r;
    r.num_ = checked_mul(n1, n2);
    r.den_ = checked_mul(d1, d2);
    if (r.num_ == 0) r.den_ = 1;
    return r;
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.reciprocal(); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const i128 lhs = checked_mul(a.num_, b.den_);
    const i128 rhs = checked_mul(b.num_, a.den_);
    return lhs <=> rhs;
}

}  // namespace moebius
