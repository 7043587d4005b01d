#include "moebius/summatory.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "compensated_sum.hpp"
#include "moebius/error.hpp"
#include "moebius/primes.hpp"

namespace moebius {

namespace {

constexpr std::uint64_t kFloatSegment = std::uint64_t(1) << 16;

std::uint64_t coprime_count_with(std::uint64_t z, const std::vector<SignedDivisor>& divisors) {
    std::int64_t total = 0;
    for (const auto& [d, sign] : divisors) total += sign * std::int64_t(z / d);
    return std::uint64_t(total);
}

// Q_k(x, n) with the squarefree divisors of n and a Moebius table covering
// x^(1/k) supplied by the caller.
std::uint64_t qk_count_with(std::uint64_t x, std::uint64_t n, unsigned k, const std::vector<SignedDivisor>& divisors,
                            const std::vector<FunctionValue>& mu_table) {
    const std::uint64_t limit = iroot(x, k);
    std::int64_t total = 0;
    for (std::uint64_t d = 1; d <= limit; ++d) {
        const FunctionValue m = mu_table[d];
        if (m == 0 || std::gcd(d, n) != 1) continue;
        const std::uint64_t dk = pow_capped(d, k, x);
        total += m * std::int64_t(coprime_count_with(x / dk, divisors));
    }
    return std::uint64_t(total);
}

std::vector<SignedDivisor> divisors_of(std::uint64_t n) { return squarefree_divisors(factorize(n)); }

}  // namespace

std::vector<FunctionValue> mobius_table(std::uint64_t limit) {
    std::vector<FunctionValue> mu(limit + 1, 1);
    std::vector<std::uint32_t> primes;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (!composite[i]) {
            primes.push_back(std::uint32_t(i));
            mu[i] = -1;
        }
        for (std::uint32_t p : primes) {
            const std::uint64_t ip = i * p;
            if (ip > limit) break;
            composite[ip] = true;
            if (i % p == 0) {
                mu[ip] = 0;
                break;
            }
            mu[ip] = FunctionValue(-mu[i]);
        }
    }
    return mu;
}

std::uint64_t coprime_count(std::uint64_t z, const FactoredInteger& n) {
    return coprime_count_with(z, squarefree_divisors(n));
}

std::uint64_t coprime_count(double z, std::uint64_t n) {
    if (!(z >= 0.0)) throw DomainError("coprime_count: z must be nonnegative");
    return coprime_count(std::uint64_t(std::floor(z)), factorize(n));
}

std::uint64_t qk_count(std::uint64_t x, std::uint64_t n, unsigned k) {
    if (k < 2) throw DomainError("qk_count: k must be >= 2");
    if (n < 1) throw DomainError("qk_count: n must be >= 1");
    if (x == 0) return 0;
    return qk_count_with(x, n, k, divisors_of(n), mobius_table(iroot(x, k)));
}

std::int64_t sum_direct(const SumQuery& q, const SieveConfig& config) {
    const std::uint64_t checkpoint[] = {q.x};
    return stream_sum(q.x, q.order, q.coprime_to, checkpoint, config).front().sum;
}

std::int64_t sum_convolution(const SumQuery& q) {
    if (q.x < 1) throw RangeError("sum_convolution: x must be >= 1");
    if (q.coprime_to < 1) throw DomainError("sum_convolution: coprime_to must be >= 1");
    const unsigned k = q.order.k();
    const unsigned m = q.order.m();
    const std::uint64_t outer = iroot(q.x, m);
    const std::vector<FunctionValue> mu_table = mobius_table(std::max(outer, iroot(q.x, k)));

    std::int64_t total = 0;
    for (std::uint64_t d = 1; d <= outer; ++d) {
        const FunctionValue m_d = mu_table[d];
        if (m_d == 0 || std::gcd(d, q.coprime_to) != 1) continue;
        if (d > kMaxFactorable / q.coprime_to) throw RangeError("sum_convolution: d * n overflows");
        const std::uint64_t dn = d * q.coprime_to;
        const std::uint64_t y = q.x / pow_capped(d, m, q.x);
        total += m_d * std::int64_t(qk_count_with(y, dn, k, divisors_of(dn), mu_table));
    }
    return total;
}

MainTermParts main_term(const SumQuery& q, std::uint64_t prime_limit, double tol) {
    MainTermParts parts;
    parts.alpha_est = alpha(q.order, prime_limit);
    parts.zeta_est = zeta(q.order.k(), tol);
    const FactoredInteger n = factorize(q.coprime_to);
    parts.psi_n = psi_k(n, q.order.k());
    parts.alpha_n = alpha_n(q.order, n);
    const double nn = double(q.coprime_to);
    parts.main = double(q.x) * nn * nn * parts.alpha_est.value /
                 (parts.zeta_est.value * parts.psi_n.to_double() * parts.alpha_n.to_double());
    return parts;
}

double mu_over_psi_power_sum(std::uint64_t lo, std::uint64_t hi, std::uint64_t n, unsigned k, unsigned power) {
    if (k < 1) throw DomainError("mu_over_psi_power_sum: k must be >= 1");
    if (n < 1) throw DomainError("mu_over_psi_power_sum: n must be >= 1");
    lo = std::max<std::uint64_t>(lo, 1);
    if (hi < lo) return 0.0;
    if (hi >= kMaxSieveValue) throw RangeError("mu_over_psi_power_sum: hi exceeds 2^62");

    const std::vector<std::uint32_t> base = primes_up_to(iroot(hi, 2));
    const FactoredInteger modulus = factorize(n);
    std::vector<std::uint64_t> excluded;
    for (const auto& f : modulus.factors()) excluded.push_back(f.prime);

    std::vector<std::uint64_t> residual(kFloatSegment);
    std::vector<FunctionValue> mu(kFloatSegment);
    std::vector<double> psi(kFloatSegment);
    detail::CompensatedSum total;
    for (std::uint64_t a = lo; a <= hi; a += kFloatSegment) {
        const std::uint64_t b = std::min(hi, a + kFloatSegment - 1);
        const std::size_t len = b - a + 1;
        for (std::size_t i = 0; i < len; ++i) {
            residual[i] = a + i;
            mu[i] = 1;
            psi[i] = 1.0;
        }
        for (std::uint64_t q : excluded)
            for (std::uint64_t r = (a + q - 1) / q * q; r <= b; r += q) mu[r - a] = 0;
        for (std::uint32_t p : base) {
            const std::uint64_t pp = std::uint64_t(p) * p;
            if (pp > b) break;
            const double psi_p = psi_k_prime(p, k);
            for (std::uint64_t r = (a + p - 1) / p * p; r <= b; r += p) {
                const std::size_t i = r - a;
                residual[i] /= p;
                mu[i] = FunctionValue(-mu[i]);
                psi[i] *= psi_p;
            }
            for (std::uint64_t r = (a + pp - 1) / pp * pp; r <= b; r += pp) mu[r - a] = 0;
        }
        for (std::size_t i = 0; i < len; ++i) {
            if (mu[i] == 0) continue;
            double weight = psi[i];
            if (residual[i] > 1) {
                weight *= psi_k_prime(residual[i], k);
                mu[i] = FunctionValue(-mu[i]);
            }
            if (power > 0) weight *= std::pow(double(a + i), double(power));
            total.add(double(mu[i]) / weight);
        }
    }
    return total.value();
}

double L_n_sum(std::uint64_t x, std::uint64_t n) { return mu_over_psi_power_sum(1, x, n, 1, 0); }

double mu_over_psi_sum(std::uint64_t x, std::uint64_t n, unsigned k) {
    if (k < 2) throw DomainError("mu_over_psi_sum: k must be >= 2");
    return mu_over_psi_power_sum(1, x, n, k, 0);
}

double mu_over_psi_weighted_sum(std::uint64_t x, std::uint64_t n, unsigned k) {
    if (k < 2) throw DomainError("mu_over_psi_weighted_sum: k must be >= 2");
    return mu_over_psi_power_sum(1, x, n, k, k - 1);
}

double mu_over_psi_weighted_tail(std::uint64_t y, std::uint64_t z, std::uint64_t n, unsigned k) {
    if (k < 2) throw DomainError("mu_over_psi_weighted_tail: k must be >= 2");
    return mu_over_psi_power_sum(y + 1, z, n, k, k - 1);
}

}  // namespace moebius
