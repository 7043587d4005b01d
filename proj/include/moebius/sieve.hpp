#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "moebius/arith.hpp"

namespace moebius {

struct SieveConfig {
    std::uint64_t segment_size = std::uint64_t(1) << 20;
    unsigned worker_count = 1;

    static constexpr std::uint64_t kMinSegment = 64;

    /// Throws DomainError unless segment_size >= 64 and worker_count >= 1.
    void validate() const;

    /// Bytes of sieve scratch held at once across all workers.
    std::uint64_t segment_memory_bytes() const;
};

/// Function values for the closed range [lo, hi].
struct SieveBlock {
    std::uint64_t lo = 1;
    std::uint64_t hi = 1;
    std::vector<FunctionValue> values;

    FunctionValue at(std::uint64_t n) const { return values.at(n - lo); }
};

inline constexpr std::uint64_t kMaxSieveValue = std::uint64_t(1) << 62;

/// mu_{k,m} on [lo, hi]. Only primes with p^k <= hi can change a cell; any
/// remaining prime factor has exponent below k and contributes 1.
/// Throws SizeError when hi - lo + 1 exceeds config.segment_size.
SieveBlock sieve_mu_km(std::uint64_t lo, std::uint64_t hi, const OrderPair& order,
                       const SieveConfig& config = {});

/// q_k on [lo, hi]: multiples of p^k are cleared.
SieveBlock sieve_qk(std::uint64_t lo, std::uint64_t hi, unsigned k, const SieveConfig& config = {});

struct PartialSum {
    std::uint64_t checkpoint;
    std::int64_t sum;

    friend bool operator==(const PartialSum&, const PartialSum&) = default;
};

/// sum_{r <= c, gcd(r, coprime_to) = 1} mu_{k,m}(r) for every checkpoint c,
/// from a single pass over [1, x]. Checkpoints are inclusive, must be
/// ascending and <= x; duplicates are answered verbatim. The result does not
/// depend on segment_size or worker_count.
std::vector<PartialSum> stream_sum(std::uint64_t x, const OrderPair& order, std::uint64_t coprime_to,
                                   std::span<const std::uint64_t> checkpoints, const SieveConfig& config = {});

}  // namespace moebius
