#include "moebius/primes.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include "moebius/error.hpp"

namespace moebius {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return std::uint64_t(u128(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1;
    base %= m;
    while (exp != 0) {
        if (exp & 1) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return r;
}

bool miller_rabin_witness(std::uint64_t n, std::uint64_t a, std::uint64_t d, unsigned s) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned r = 1; r < s; ++r) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return false;
    }
    return true;
}

}  // namespace

void for_each_prime(std::uint64_t limit, const std::function<void(std::uint32_t)>& visit) {
    if (limit < 2) return;
    if (limit > 0xFFFFFFFFull) throw SizeError("for_each_prime: limit exceeds 2^32");
    visit(2);
    if (limit < 3) return;

    const std::uint64_t root = iroot(limit, 2);
    std::vector<std::uint32_t> base;
    {
        // Plain sieve for the base primes up to sqrt(limit) (at most 65536).
        std::vector<bool> comp(root + 1, false);
        for (std::uint64_t i = 3; i <= root; i += 2) {
            if (comp[i]) continue;
            base.push_back(std::uint32_t(i));
            for (std::uint64_t j = i * i; j <= root; j += 2 * i) comp[j] = true;
        }
    }

    // Segment over odd numbers only: index i represents lo + 2i.
    constexpr std::uint64_t kSegment = 1u << 18;
    std::vector<char> seg(kSegment);
    for (std::uint64_t lo = 3; lo <= limit; lo += 2 * kSegment) {
        const std::uint64_t hi = std::min(limit, lo + 2 * kSegment - 1);
        const std::uint64_t count = (hi - lo) / 2 + 1;
        std::fill(seg.begin(), seg.begin() + std::ptrdiff_t(count), 1);
        for (std::uint32_t p : base) {
            const std::uint64_t pp = std::uint64_t(p) * p;
            if (pp > hi) break;
            std::uint64_t start = std::max(pp, (lo + p - 1) / p * p);
            if (start % 2 == 0) start += p;
            for (std::uint64_t j = start; j <= hi; j += 2ull * p) seg[(j - lo) / 2] = 0;
        }
        for (std::uint64_t i = 0; i < count; ++i)
            if (seg[i]) visit(std::uint32_t(lo + 2 * i));
    }
}

std::vector<std::uint32_t> primes_up_to(std::uint64_t limit) {
    std::vector<std::uint32_t> out;
    for_each_prime(limit, [&](std::uint32_t p) { out.push_back(p); });
    return out;
}

std::span<const std::uint32_t> small_primes() {
    static const std::vector<std::uint32_t> table = primes_up_to(kSmallPrimeLimit);
    return table;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This witness set is deterministic for n < 3.3 * 10^24.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (miller_rabin_witness(n, a, d, s)) return false;
    }
    return true;
}

std::uint64_t pow_capped(std::uint64_t a, unsigned e, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (a != 0 && r > cap / a) return 0;
        r *= a;
    }
    return r > cap ? 0 : r;
}

std::uint64_t iroot(std::uint64_t x, unsigned k) {
    if (k == 0) throw DomainError("iroot: k must be >= 1");
    if (k == 1 || x < 2) return x;
    auto r = std::uint64_t(std::pow(static_cast<long double>(x), 1.0L / k));
    // Correct the floating estimate in both directions.
    while (r > 0 && pow_capped(r, k, x) == 0) --r;
    while (pow_capped(r + 1, k, x) != 0) ++r;
    return r;
}

}  // namespace moebius
