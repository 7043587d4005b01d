#pragma once

#include <cstdint>
#include <vector>

#include "moebius/arith.hpp"
#include "moebius/constants.hpp"
#include "moebius/sieve.hpp"

namespace moebius {

/// sum_{r <= x, gcd(r, coprime_to) = 1} mu_{k,m}(r). coprime_to = 1 means
/// unrestricted.
struct SumQuery {
    std::uint64_t x;
    OrderPair order;
    std::uint64_t coprime_to = 1;
};

/// Main term x n^2 alpha_{k,m} / (zeta(k) psi_k(n) alpha_{k,m}(n)) and the
/// pieces it was assembled from.
struct MainTermParts {
    double main = 0.0;
    ConstantEstimate alpha_est;
    ConstantEstimate zeta_est;
    Rational psi_n;
    Rational alpha_n;
};

/// #{t <= z : gcd(t, n) = 1} by inclusion-exclusion over squarefree d | n.
std::uint64_t coprime_count(std::uint64_t z, const FactoredInteger& n);
std::uint64_t coprime_count(double z, std::uint64_t n);

/// Q_k(x, n) = #{r <= x : gcd(r, n) = 1, r k-free}, computed as
/// sum_{d <= x^(1/k), gcd(d,n)=1} mu(d) * coprime_count(x / d^k, n).
std::uint64_t qk_count(std::uint64_t x, std::uint64_t n, unsigned k);

/// Streaming sieve sum.
std::int64_t sum_direct(const SumQuery& q, const SieveConfig& config = {});

/// sum_{d <= x^(1/m), gcd(d,n)=1} mu(d) * Q_k(x / d^m, d n). Shares no code
/// path with sum_direct beyond integer roots and factorization.
std::int64_t sum_convolution(const SumQuery& q);

MainTermParts main_term(const SumQuery& q, std::uint64_t prime_limit = kDefaultPrimeLimit, double tol = 1e-12);

/// sum_{lo <= r <= hi, gcd(r,n)=1} mu(r) / (psi_k(r) r^power), accumulated in
/// ascending r with compensated binary64 summation. k = 1 gives psi_1(r) = r.
double mu_over_psi_power_sum(std::uint64_t lo, std::uint64_t hi, std::uint64_t n, unsigned k, unsigned power);

/// L_n(x) = sum_{r <= x, (r,n)=1} mu(r) / r.
double L_n_sum(std::uint64_t x, std::uint64_t n);

/// sum_{r <= x, (r,n)=1} mu(r) / psi_k(r).
double mu_over_psi_sum(std::uint64_t x, std::uint64_t n, unsigned k);

/// sum_{r <= x, (r,n)=1} mu(r) / (psi_k(r) r^(k-1)).
double mu_over_psi_weighted_sum(std::uint64_t x, std::uint64_t n, unsigned k);

/// The same weighted sum restricted to y < r <= z.
double mu_over_psi_weighted_tail(std::uint64_t y, std::uint64_t z, std::uint64_t n, unsigned k);

/// Moebius values mu(0..limit) from a linear sieve; index 0 is unused.
std::vector<FunctionValue> mobius_table(std::uint64_t limit);

}  // namespace moebius
