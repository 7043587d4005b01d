#pragma once

#include <cstdint>

#include "moebius/arith.hpp"
#include "moebius/factor.hpp"
#include "moebius/rational.hpp"

namespace moebius {

/// Floating approximation of an infinite Euler product or series.
///
/// For products, `truncated` is the plain product over p <= prime_limit and
/// `value` additionally divides out an estimate of the prime tail taken from
/// the prime density 1/log x. The true constant lies in
/// [truncated * exp(-L), truncated] where L is an elementary integral bound on
/// the log-tail; `tail_bound` is the full width of that interval plus a
/// rounding allowance, so it bounds |true - value| and |true - truncated|.
///
/// For zeta, prime_limit holds the number of series terms summed.
struct ConstantEstimate {
    double value = 0.0;
    double tail_bound = 0.0;
    std::uint64_t prime_limit = 0;
    double truncated = 0.0;
};

inline constexpr std::uint64_t kDefaultPrimeLimit = 1'000'000;
inline constexpr std::uint64_t kMaxZetaTerms = 100'000'000;

/// zeta(k) = sum n^-k. The tail past N is enclosed by the integrals from N and
/// N + 1; the value uses their midpoint. PrecisionError if tol would need more
/// than 10^8 terms or is below the rounding floor.
ConstantEstimate zeta(unsigned k, double tol);

/// 1 - 1/(p^(m-k+1) + ... + p^m), exact. DomainError if p is not prime.
Rational euler_factor(std::uint64_t p, const OrderPair& order);

/// alpha_{k,m} = prod_p euler_factor(p). Log-tail bound: the factor
/// denominator is at least p^m, so sum_{p>P} -log f(p) <= 2 P^(1-m) / (m-1).
ConstantEstimate alpha(const OrderPair& order, std::uint64_t prime_limit = kDefaultPrimeLimit);

/// Apostol's A_k = prod_p (1 - 2/p^k + 1/p^(k+1)). Log-tail bound
/// 4 P^(1-k) / (k-1).
ConstantEstimate apostol_A(unsigned k, std::uint64_t prime_limit = kDefaultPrimeLimit);

/// alpha_{k,m}(n) = n * prod_{p | n} euler_factor(p), exact.
Rational alpha_n(const OrderPair& order, const FactoredInteger& n);

}  // namespace moebius
