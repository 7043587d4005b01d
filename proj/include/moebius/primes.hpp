#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace moebius {

/// Calls `visit` on every prime p <= limit in ascending order, using one
/// fixed-size sieve segment regardless of limit (limit < 2^32).
void for_each_prime(std::uint64_t limit, const std::function<void(std::uint32_t)>& visit);

/// All primes p <= limit, ascending.
std::vector<std::uint32_t> primes_up_to(std::uint64_t limit);

/// Primes below 10^6, built once on first use (thread-safe).
std::span<const std::uint32_t> small_primes();

inline constexpr std::uint64_t kSmallPrimeLimit = 1'000'000;

/// Deterministic Miller-Rabin for all 64-bit inputs.
bool is_prime(std::uint64_t n);

/// floor(x^(1/k)) computed in integer arithmetic, k >= 1.
std::uint64_t iroot(std::uint64_t x, unsigned k);

/// a^e for a >= 1, or 0 when the result exceeds `cap`.
std::uint64_t pow_capped(std::uint64_t a, unsigned e, std::uint64_t cap);

}  // namespace moebius
