#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace moebius {

using i128 = __int128;
using u128 = unsigned __int128;

std::string to_string(i128 v);

/// Exact rational number, always stored in lowest terms with a positive
/// denominator.
///
/// Numerator and denominator are 128-bit. Every operation cross-reduces
/// before multiplying and checks the result; overflow throws
/// PrecisionError instead of wrapping.
class Rational {
public:
    constexpr Rational() = default;
    Rational(i128 num);  // NOLINT(google-explicit-constructor)
    Rational(i128 num, i128 den);

    i128 num() const { return num_; }
    i128 den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    double to_double() const;
    std::string str() const;

    Rational operator-() const;
    Rational reciprocal() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    i128 num_ = 0;
    i128 den_ = 1;
};

// Checked 128-bit helpers shared with the rest of the library.
i128 checked_add(i128 a, i128 b);
i128 checked_mul(i128 a, i128 b);
i128 checked_pow(i128 base, unsigned exp);
i128 gcd128(i128 a, i128 b);

}  // namespace moebius
