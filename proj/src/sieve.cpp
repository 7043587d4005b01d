#include "moebius/sieve.hpp"

#include <algorithm>
#include <string>
#include <thread>

#include "moebius/error.hpp"
#include "moebius/primes.hpp"

namespace moebius {

namespace {

// Prime-power table applied to cells divisible by p^k. q_k clears every such
// cell; mu_{k,m} needs the exact exponent.
struct PowerTable {
    unsigned k;
    unsigned m;
    bool kfree_only;

    // Factor for an exponent e >= k.
    FunctionValue factor(unsigned e) const { return e == m ? -1 : 0; }
};

// Applies one prime to the block [lo, lo + cells.size()).
void apply_prime(std::uint64_t p, std::uint64_t lo, std::span<FunctionValue> cells, const PowerTable& table) {
    const std::uint64_t hi = lo + cells.size() - 1;
    const std::uint64_t pk = pow_capped(p, table.k, hi);
    if (pk == 0) return;
    const std::uint64_t first = (lo + pk - 1) / pk * pk;
    for (std::uint64_t n = first; n <= hi; n += pk) {
        FunctionValue& cell = cells[n - lo];
        if (cell == 0) continue;
        if (table.kfree_only) {
            cell = 0;
            continue;
        }
        std::uint64_t q = n / pk;
        unsigned e = table.k;
        while (e <= table.m && q % p == 0) {
            q /= p;
            ++e;
        }
        cell = FunctionValue(cell * table.factor(e));
    }
}

void check_range(std::uint64_t lo, std::uint64_t hi, const SieveConfig& config) {
    config.validate();
    if (lo < 1 || hi < lo) throw RangeError("sieve: require 1 <= lo <= hi");
    if (hi > kMaxSieveValue) throw RangeError("sieve: hi exceeds 2^62");
    if (hi - lo >= config.segment_size)
        throw SizeError("sieve: range of " + std::to_string(hi - lo + 1) + " exceeds segment size " +
                        std::to_string(config.segment_size));
}

SieveBlock sieve_single(std::uint64_t lo, std::uint64_t hi, const PowerTable& table, const SieveConfig& config) {
    check_range(lo, hi, config);
    SieveBlock block{lo, hi, std::vector<FunctionValue>(hi - lo + 1, 1)};
    for_each_prime(iroot(hi, table.k), [&](std::uint32_t p) { apply_prime(p, lo, block.values, table); });
    return block;
}

struct SegmentResult {
    std::int64_t total = 0;
    // Local prefix sums for checkpoints [first_checkpoint, first_checkpoint + local.size()).
    std::size_t first_checkpoint = 0;
    std::vector<std::int64_t> local;
};

}  // namespace

void SieveConfig::validate() const {
    if (segment_size < kMinSegment) throw DomainError("SieveConfig: segment_size must be >= 64");
    if (worker_count < 1) throw DomainError("SieveConfig: worker_count must be >= 1");
}

std::uint64_t SieveConfig::segment_memory_bytes() const {
    return segment_size * sizeof(FunctionValue) * worker_count;
}

SieveBlock sieve_mu_km(std::uint64_t lo, std::uint64_t hi, const OrderPair& order, const SieveConfig& config) {
    return sieve_single(lo, hi, PowerTable{order.k(), order.m(), false}, config);
}

SieveBlock sieve_qk(std::uint64_t lo, std::uint64_t hi, unsigned k, const SieveConfig& config) {
    if (k < 2) throw DomainError("sieve_qk: k must be >= 2");
    return sieve_single(lo, hi, PowerTable{k, k, true}, config);
}

std::vector<PartialSum> stream_sum(std::uint64_t x, const OrderPair& order, std::uint64_t coprime_to,
                                   std::span<const std::uint64_t> checkpoints, const SieveConfig& config) {
    config.validate();
    if (x < 1) throw RangeError("stream_sum: x must be >= 1");
    if (x >= kMaxSieveValue) throw RangeError("stream_sum: x must be below 2^62");
    if (coprime_to < 1) throw DomainError("stream_sum: coprime_to must be >= 1");
    if (!std::is_sorted(checkpoints.begin(), checkpoints.end()))
        throw RangeError("stream_sum: checkpoints must be ascending");
    if (!checkpoints.empty() && checkpoints.back() > x) throw RangeError("stream_sum: checkpoint exceeds x");

    const PowerTable table{order.k(), order.m(), false};
    const std::vector<std::uint32_t> base = primes_up_to(iroot(x, order.k()));
    const FactoredInteger modulus = factorize(coprime_to);
    std::vector<std::uint64_t> excluded;
    for (const auto& f : modulus.factors()) excluded.push_back(f.prime);

    const std::uint64_t seg = config.segment_size;
    const std::uint64_t segments = (x + seg - 1) / seg;
    const unsigned workers = config.worker_count;

    auto run_segment = [&](std::uint64_t index, std::vector<FunctionValue>& scratch, SegmentResult& out) {
        const std::uint64_t lo = 1 + index * seg;
        const std::uint64_t hi = std::min(x, lo + seg - 1);
        std::span<FunctionValue> cells(scratch.data(), hi - lo + 1);
        std::fill(cells.begin(), cells.end(), FunctionValue(1));
        for (std::uint32_t p : base) {
            if (pow_capped(p, table.k, hi) == 0) break;
            apply_prime(p, lo, cells, table);
        }
        for (std::uint64_t q : excluded)
            for (std::uint64_t n = (lo + q - 1) / q * q; n <= hi; n += q) cells[n - lo] = 0;

        auto begin = std::lower_bound(checkpoints.begin(), checkpoints.end(), lo);
        auto end = std::upper_bound(begin, checkpoints.end(), hi);
        out.first_checkpoint = std::size_t(begin - checkpoints.begin());
        out.local.clear();
        std::int64_t running = 0;
        std::uint64_t n = lo;
        for (auto it = begin; it != end; ++it) {
            for (; n <= *it; ++n) running += cells[n - lo];
            out.local.push_back(running);
        }
        for (; n <= hi; ++n) running += cells[n - lo];
        out.total = running;
    };

    std::vector<PartialSum> result;
    result.reserve(checkpoints.size());
    // Checkpoints below 1 cover an empty range.
    std::size_t answered = 0;
    while (answered < checkpoints.size() && checkpoints[answered] < 1) result.push_back({checkpoints[answered++], 0});

    std::vector<std::vector<FunctionValue>> scratch(workers, std::vector<FunctionValue>(std::min(seg, x)));
    // Each round gives every worker a few segments; the reducer then folds
    // them in ascending segment order.
    const std::uint64_t per_round = std::uint64_t(workers) * 4;
    std::vector<SegmentResult> round(per_round);
    std::int64_t running = 0;
    for (std::uint64_t start = 0; start < segments; start += per_round) {
        const std::uint64_t count = std::min(per_round, segments - start);
        if (workers == 1) {
            for (std::uint64_t i = 0; i < count; ++i) run_segment(start + i, scratch[0], round[i]);
        } else {
            std::vector<std::jthread> pool;
            for (unsigned w = 0; w < workers; ++w) {
                pool.emplace_back([&, w] {
                    for (std::uint64_t i = w; i < count; i += workers) run_segment(start + i, scratch[w], round[i]);
                });
            }
        }
        for (std::uint64_t i = 0; i < count; ++i) {
            const SegmentResult& r = round[i];
            for (std::size_t j = 0; j < r.local.size(); ++j)
                result.push_back({checkpoints[r.first_checkpoint + j], running + r.local[j]});
            running += r.total;
        }
    }
    return result;
}

}  // namespace moebius
