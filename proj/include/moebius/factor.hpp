#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "moebius/rational.hpp"

namespace moebius {

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Canonical factorization of a positive integer below 2^63.
///
/// Primes are strictly increasing, exponents are positive and the product
/// of the prime powers is value(). The empty factorization is 1.
class FactoredInteger {
public:
    FactoredInteger() = default;

    /// Validates and adopts an explicit factorization.
    static FactoredInteger from_factors(std::vector<PrimePower> factors);

    std::uint64_t value() const { return value_; }
    const std::vector<PrimePower>& factors() const { return factors_; }

    /// Number of distinct prime factors.
    unsigned omega() const { return unsigned(factors_.size()); }
    /// Product of the distinct primes.
    std::uint64_t radical() const;

    /// Exponent of p in value (0 if p does not divide it).
    unsigned exponent_of(std::uint64_t p) const;

    friend bool operator==(const FactoredInteger&, const FactoredInteger&) = default;

private:
    friend FactoredInteger factorize(std::uint64_t n);
    std::uint64_t value_ = 1;
    std::vector<PrimePower> factors_;
};

inline constexpr std::uint64_t kMaxFactorable = 0x7FFFFFFFFFFFFFFFull;

/// Trial division by primes below 10^6, then Miller-Rabin and Pollard rho
/// on any larger cofactor. Throws DomainError for n == 0 or n >= 2^63.
FactoredInteger factorize(std::uint64_t n);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

struct SignedDivisor {
    std::uint64_t divisor;
    int mu;

    friend bool operator==(const SignedDivisor&, const SignedDivisor&) = default;
};

inline constexpr unsigned kMaxSquarefreeOmega = 30;

/// The 2^omega(n) squarefree divisors of n with their Moebius values,
/// ascending by divisor. SizeError if omega(n) > 30.
std::vector<SignedDivisor> squarefree_divisors(const FactoredInteger& n);

/// Values of a multiplicative function on prime powers; f(p, 0) must be 1.
struct PrimePowerRule {
    std::function<Rational(std::uint64_t prime, unsigned exponent)> eval_at;
};

/// Product of rule(p, e) over the factorization. Throws DomainError if the
/// rule is not normalized at one of the primes involved.
Rational eval_multiplicative(const PrimePowerRule& rule, const FactoredInteger& n);

}  // namespace moebius
