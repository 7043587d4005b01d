#include "moebius/factor.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "moebius/error.hpp"
#include "moebius/primes.hpp"

namespace moebius {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return std::uint64_t(u128(a) * b % m);
}

// Brent's variant of Pollard rho. n is odd, composite and has no prime
// factor below 10^6. The constant c is walked deterministically.
std::uint64_t find_factor(std::uint64_t n) {
    for (std::uint64_t c = 1;; ++c) {
        auto f = [&](std::uint64_t v) { return (mul_mod(v, v, n) + c) % n; };
        std::uint64_t y = 2, x = 2, ys = 2, q = 1, g = 1;
        constexpr std::uint64_t kBatch = 128;
        for (std::uint64_t r = 1; g == 1; r <<= 1) {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i) y = f(y);
            for (std::uint64_t k = 0; k < r && g == 1; k += kBatch) {
                ys = y;
                for (std::uint64_t i = 0; i < std::min(kBatch, r - k); ++i) {
                    y = f(y);
                    q = mul_mod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
            }
        }
        if (g == n) {
            // Batched product hit zero; backtrack one step at a time.
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void split_large(std::uint64_t n, std::map<std::uint64_t, unsigned>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    const std::uint64_t d = find_factor(n);
    split_large(d, out);
    split_large(n / d, out);
}

}  // namespace

FactoredInteger FactoredInteger::from_factors(std::vector<PrimePower> factors) {
    FactoredInteger out;
    std::uint64_t value = 1;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const auto& [p, e] = factors[i];
        if (e == 0) throw DomainError("from_factors: zero exponent");
        if (i > 0 && factors[i - 1].prime >= p) throw DomainError("from_factors: primes not strictly increasing");
        if (!is_prime(p)) throw DomainError("from_factors: " + std::to_string(p) + " is not prime");
        const std::uint64_t pe = pow_capped(p, e, kMaxFactorable);
        if (pe == 0 || value > kMaxFactorable / pe) throw DomainError("from_factors: value exceeds 2^63-1");
        value *= pe;
    }
    out.value_ = value;
    out.factors_ = std::move(factors);
    return out;
}

std::uint64_t FactoredInteger::radical() const {
    std::uint64_t r = 1;
    for (const auto& f : factors_) r *= f.prime;
    return r;
}

unsigned FactoredInteger::exponent_of(std::uint64_t p) const {
    for (const auto& f : factors_)
        if (f.prime == p) return f.exponent;
    return 0;
}

FactoredInteger factorize(std::uint64_t n) {
    if (n == 0) throw DomainError("factorize: n must be positive");
    if (n > kMaxFactorable) throw DomainError("factorize: n exceeds 2^63-1");

    FactoredInteger out;
    out.value_ = n;
    std::uint64_t rest = n;
    for (std::uint32_t p : small_primes()) {
        if (std::uint64_t(p) * p > rest) break;
        if (rest % p != 0) continue;
        unsigned e = 0;
        do {
            rest /= p;
            ++e;
        } while (rest % p == 0);
        out.factors_.push_back({p, e});
    }
    if (rest == 1) return out;
    // Any cofactor below 10^12 that survived trial division is prime.
    if (rest < kSmallPrimeLimit * kSmallPrimeLimit) {
        out.factors_.push_back({rest, 1});
        return out;
    }
    std::map<std::uint64_t, unsigned> large;
    split_large(rest, large);
    for (const auto& [p, e] : large) out.factors_.push_back({p, e});
    return out;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::vector<SignedDivisor> squarefree_divisors(const FactoredInteger& n) {
    if (n.omega() > kMaxSquarefreeOmega) throw SizeError("squarefree_divisors: omega(n) > 30");
    std::vector<SignedDivisor> out{{1, 1}};
    out.reserve(std::size_t(1) << n.omega());
    for (const auto& f : n.factors()) {
        const std::size_t half = out.size();
        for (std::size_t i = 0; i < half; ++i) out.push_back({out[i].divisor * f.prime, -out[i].mu});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.divisor < b.divisor; });
    return out;
}

Rational eval_multiplicative(const PrimePowerRule& rule, const FactoredInteger& n) {
    Rational acc(1);
    for (const auto& [p, e] : n.factors()) {
        if (rule.eval_at(p, 0) != Rational(1)) throw DomainError("eval_multiplicative: rule has f(p^0) != 1");
        acc *= rule.eval_at(p, e);
        if (acc == Rational(0)) break;
    }
    return acc;
}

}  // namespace moebius
