#pragma once

#include <cstdint>

#include "moebius/factor.hpp"
#include "moebius/rational.hpp"

namespace moebius {

/// Parameter pair (k, m) of the generalized Moebius function mu_{k,m}.
/// Requires 2 <= k <= m; m == k selects Apostol's mu_k.
class OrderPair {
public:
    OrderPair(unsigned k, unsigned m);
    static OrderPair apostol(unsigned k) { return {k, k}; }

    unsigned k() const { return k_; }
    unsigned m() const { return m_; }
    bool is_apostol() const { return k_ == m_; }

    friend bool operator==(const OrderPair&, const OrderPair&) = default;

private:
    unsigned k_;
    unsigned m_;
};

/// Value of mu, mu_k, mu_{k,m} (in {-1, 0, 1}) or q_k (in {0, 1}).
using FunctionValue = std::int8_t;

/// mu_{k,m}(p^e): 1 below k, 0 on [k, m), -1 at m, 0 above m.
FunctionValue mu_km_prime_power(unsigned exponent, const OrderPair& order);

FunctionValue mu(std::uint64_t n);
FunctionValue mu(const FactoredInteger& n);

/// Apostol's Moebius function of order k, coded from the four-case
/// definition (1 at n = 1; 0 if some p^(k+1) | n; (-1)^r where r counts
/// primes of exact exponent k; 1 otherwise). Independent of mu_km.
FunctionValue mu_apostol(std::uint64_t n, unsigned k);
FunctionValue mu_apostol(const FactoredInteger& n, unsigned k);

FunctionValue mu_km(std::uint64_t n, const OrderPair& order);
FunctionValue mu_km(const FactoredInteger& n, const OrderPair& order);

/// Indicator of the k-free integers.
FunctionValue q_k(std::uint64_t n, unsigned k);
FunctionValue q_k(const FactoredInteger& n, unsigned k);

/// Number of squarefree divisors, 2^omega(n).
std::uint64_t theta(std::uint64_t n);
std::uint64_t theta(const FactoredInteger& n);

/// psi_k(n) = n * prod_{p | n} (1 + 1/p + ... + 1/p^(k-1)), exact.
/// k = 1 is admitted and gives psi_1(n) = n.
Rational psi_k(std::uint64_t n, unsigned k);
Rational psi_k(const FactoredInteger& n, unsigned k);

/// psi_k at a single prime power in binary64 (used by the float sums).
double psi_k_prime(std::uint64_t p, unsigned k);

/// sigma*_alpha(n) = prod_{p | n} (1 + p^alpha), the sum of alpha-th powers of
/// the squarefree divisors. The integer overload is exact and requires
/// alpha <= 0; the double overload accepts any real alpha.
Rational sigma_star(const FactoredInteger& n, int alpha);
double sigma_star(const FactoredInteger& n, double alpha);

}  // namespace moebius
