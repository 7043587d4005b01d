#include <doctest.h>

#include <random>

#include "moebius/error.hpp"
#include "moebius/sieve.hpp"

using namespace moebius;

namespace {

std::vector<FunctionValue> pointwise(std::uint64_t lo, std::uint64_t hi, const OrderPair& o) {
    std::vector<FunctionValue> out;
    for (std::uint64_t n = lo; n <= hi; ++n) out.push_back(mu_km(n, o));
    return out;
}

}  // namespace

TEST_CASE("sieve_mu_km examples") {
    const OrderPair o(2, 3);
    CHECK(sieve_mu_km(1, 12, o).values == std::vector<FunctionValue>{1, 1, 1, 0, 1, 1, 1, -1, 0, 1, 1, 0});
    CHECK(sieve_mu_km(1, 1, OrderPair(4, 9)).values == std::vector<FunctionValue>{1});

    const SieveBlock block = sieve_mu_km(1'000'001, 1'000'016, o);
    CHECK(block.values == std::vector<FunctionValue>{1, 1, 1, 0, 1, 1, 1, 0, 1, 1, 1, 0, 1, 1, 1, 0});
    CHECK(block.values == pointwise(1'000'001, 1'000'016, o));
}

TEST_CASE("sieve_qk examples") {
    CHECK(sieve_qk(1, 10, 2).values == std::vector<FunctionValue>{1, 1, 1, 0, 1, 1, 1, 0, 0, 1});
    CHECK(sieve_qk(1, 1, 5).values == std::vector<FunctionValue>{1});
    // 48 = 2^4 * 3, 49 = 7^2, 50 = 2 * 5^2.
    CHECK(sieve_qk(48, 50, 2).values == std::vector<FunctionValue>{0, 0, 0});
}

TEST_CASE("sieve errors") {
    SieveConfig small;
    small.segment_size = 64;
    CHECK_THROWS_AS(sieve_mu_km(1, 65, OrderPair(2, 3), small), SizeError);
    CHECK(sieve_mu_km(1, 64, OrderPair(2, 3), small).values.size() == 64);
    CHECK_THROWS_AS(sieve_mu_km(0, 10, OrderPair(2, 3)), RangeError);
    CHECK_THROWS_AS(sieve_mu_km(10, 9, OrderPair(2, 3)), RangeError);
    CHECK_THROWS_AS(sieve_qk(1, 10, 1), DomainError);
    SieveConfig bad;
    bad.segment_size = 10;
    CHECK_THROWS_AS(sieve_qk(1, 5, 2, bad), DomainError);
    bad.segment_size = 64;
    bad.worker_count = 0;
    CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_CASE("sieve blocks agree with pointwise evaluation") {
    for (const OrderPair o : {OrderPair(2, 2), OrderPair(2, 3), OrderPair(3, 5), OrderPair(4, 6)}) {
        SieveConfig config;
        config.segment_size = 1 << 16;
        for (std::uint64_t lo = 1; lo < 200000; lo += config.segment_size) {
            const std::uint64_t hi = lo + config.segment_size - 1;
            const SieveBlock block = sieve_mu_km(lo, hi, o, config);
            for (std::uint64_t n = lo; n <= hi; ++n) {
                if (block.at(n) != mu_km(n, o)) FAIL("n=", n);
                if (o.is_apostol() && sieve_qk(n, n, o.k()).values[0] != q_k(n, o.k())) FAIL("q_k n=", n);
            }
        }
    }
}

TEST_CASE("sampled block/point agreement up to 10^8") {
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<std::uint64_t> dist(1, 100'000'000);
    const OrderPair o(2, 3);
    for (int i = 0; i < 10000; ++i) {
        const std::uint64_t n = dist(rng);
        const SieveBlock block = sieve_mu_km(n, n + 7, o);
        for (std::uint64_t j = n; j <= n + 7; ++j)
            if (block.at(j) != mu_km(j, o)) FAIL("n=", j);
    }
}

TEST_CASE("sieve far from the origin") {
    const std::uint64_t lo = 100'000'000'000'000ull;
    for (const OrderPair o : {OrderPair(2, 3), OrderPair(3, 3)}) {
        const SieveBlock block = sieve_mu_km(lo, lo + 2000, o);
        CHECK(block.values == pointwise(lo, lo + 2000, o));
    }
}

TEST_CASE("stream_sum examples") {
    const OrderPair o(2, 3);
    const std::uint64_t twelve[] = {12};
    CHECK(stream_sum(12, o, 1, twelve) == std::vector<PartialSum>{{12, 7}});
    CHECK(stream_sum(12, o, 2, twelve) == std::vector<PartialSum>{{12, 5}});
    const std::uint64_t one[] = {1};
    CHECK(stream_sum(1, OrderPair(5, 7), 1, one) == std::vector<PartialSum>{{1, 1}});
}

TEST_CASE("stream_sum checkpoints are inclusive and may repeat") {
    const OrderPair o(2, 3);
    const std::uint64_t cps[] = {1, 4, 4, 8, 12};
    const auto sums = stream_sum(12, o, 1, cps);
    // Prefix sums of 1,1,1,0,1,1,1,-1,0,1,1,0.
    CHECK(sums == std::vector<PartialSum>{{1, 1}, {4, 3}, {4, 3}, {8, 5}, {12, 7}});
    CHECK(stream_sum(12, o, 1, {}).empty());
}

TEST_CASE("stream_sum errors") {
    const OrderPair o(2, 3);
    const std::uint64_t unsorted[] = {5, 3};
    CHECK_THROWS_AS(stream_sum(10, o, 1, unsorted), RangeError);
    const std::uint64_t beyond[] = {11};
    CHECK_THROWS_AS(stream_sum(10, o, 1, beyond), RangeError);
    CHECK_THROWS_AS(stream_sum(0, o, 1, {}), RangeError);
    CHECK_THROWS_AS(stream_sum(kMaxSieveValue, o, 1, {}), RangeError);
    CHECK_THROWS_AS(stream_sum(10, o, 0, {}), DomainError);
}

TEST_CASE("stream_sum is independent of segment size and worker count") {
    const std::uint64_t x = 300'000;
    std::vector<std::uint64_t> cps;
    for (std::uint64_t c = 1; c <= x; c = c * 3 + 1) cps.push_back(c);
    cps.push_back(x);
    for (const OrderPair o : {OrderPair(2, 2), OrderPair(2, 3), OrderPair(3, 5)}) {
        for (std::uint64_t n : {1ull, 6ull, 30ull}) {
            SieveConfig reference;
            reference.segment_size = 1 << 20;
            const auto expected = stream_sum(x, o, n, cps, reference);
            for (std::uint64_t seg : {64ull, 4096ull, 1ull << 20}) {
                for (unsigned workers : {1u, 4u}) {
                    SieveConfig config;
                    config.segment_size = seg;
                    config.worker_count = workers;
                    CHECK(stream_sum(x, o, n, cps, config) == expected);
                }
            }
        }
    }
}

TEST_CASE("stream_sum matches a pointwise running sum") {
    const OrderPair o(3, 4);
    std::vector<std::uint64_t> cps;
    for (std::uint64_t c = 1000; c <= 20000; c += 1000) cps.push_back(c);
    SieveConfig config;
    config.segment_size = 777;
    const auto sums = stream_sum(20000, o, 10, cps, config);
    std::int64_t running = 0;
    std::size_t idx = 0;
    for (std::uint64_t r = 1; r <= 20000; ++r) {
        if (r % 2 != 0 && r % 5 != 0) running += mu_km(r, o);
        if (idx < cps.size() && cps[idx] == r) CHECK(sums[idx++].sum == running);
    }
}

TEST_CASE("segment memory estimate") {
    SieveConfig config;
    config.segment_size = 1'000'000;
    config.worker_count = 4;
    CHECK(config.segment_memory_bytes() == 4'000'000);
}
