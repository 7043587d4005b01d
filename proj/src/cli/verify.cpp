#include "moebius/cli/verify.hpp"

#include <cmath>
#include <numeric>

#include "moebius/constants.hpp"
#include "moebius/error.hpp"
#include "moebius/primes.hpp"
#include "moebius/summatory.hpp"

namespace moebius::cli {

namespace {

std::string order_str(const OrderPair& o) {
    return "(" + std::to_string(o.k()) + "," + std::to_string(o.m()) + ")";
}

}  // namespace

VerifyReport verify_range(std::string suite, std::uint64_t limit,
                          const std::function<std::string(std::uint64_t)>& check) {
    VerifyReport report;
    report.suite = std::move(suite);
    for (std::uint64_t n = 1; n <= limit; ++n) {
        ++report.checked;
        std::string failure = check(n);
        if (failure.empty()) {
            ++report.passed;
        } else if (!report.counterexample) {
            report.counterexample = std::move(failure);
        }
    }
    return report;
}

std::int64_t lemma21_convolution(std::uint64_t n, const OrderPair& order) {
    std::int64_t total = 0;
    for (std::uint64_t d = 1;; ++d) {
        const std::uint64_t dm = pow_capped(d, order.m(), n);
        if (dm == 0) break;
        if (n % dm != 0) continue;
        const std::uint64_t delta = n / dm;
        if (std::gcd(d, delta) != 1) continue;
        total += mu(d) * q_k(delta, order.k());
    }
    return total;
}

const std::vector<OrderPair>& verification_orders() {
    static const std::vector<OrderPair> orders = {{2, 2}, {2, 3}, {2, 4}, {3, 3}, {3, 5}, {4, 6}};
    return orders;
}

VerifyReport verify_lemma21(std::uint64_t limit) {
    return verify_range("lemma21", limit, [](std::uint64_t n) -> std::string {
        const FactoredInteger f = factorize(n);
        for (const auto& order : verification_orders()) {
            const std::int64_t lhs = mu_km(f, order);
            const std::int64_t rhs = lemma21_convolution(n, order);
            if (lhs != rhs)
                return "n=" + std::to_string(n) + " order=" + order_str(order) + " mu_km=" + std::to_string(lhs) +
                       " convolution=" + std::to_string(rhs);
        }
        return {};
    });
}

VerifyReport verify_lemma24(std::uint64_t limit) {
    return verify_range("lemma24", limit, [](std::uint64_t n) -> std::string {
        const FactoredInteger f = factorize(n);
        for (unsigned k = 2; k <= 5; ++k) {
            Rational lhs(0);
            for (const auto& [d, sign] : squarefree_divisors(f)) {
                const FactoredInteger fd = factorize(d);
                lhs += Rational(sign) * psi_k(fd, k - 1) / (Rational(i128(d)) * psi_k(fd, k));
            }
            const Rational rhs = Rational(i128(n)) / psi_k(f, k);
            if (lhs != rhs)
                return "n=" + std::to_string(n) + " k=" + std::to_string(k) + " lhs=" + lhs.str() + " rhs=" + rhs.str();
        }
        return {};
    });
}

VerifyReport verify_apostol(std::uint64_t limit) {
    return verify_range("apostol", limit, [](std::uint64_t n) -> std::string {
        const FactoredInteger f = factorize(n);
        for (unsigned k = 2; k <= 4; ++k) {
            const int table = mu_km(f, OrderPair::apostol(k));
            const int direct = mu_apostol(f, k);
            if (table != direct)
                return "n=" + std::to_string(n) + " k=" + std::to_string(k) + " mu_kk=" + std::to_string(table) +
                       " mu_k=" + std::to_string(direct);
        }
        return {};
    });
}

VerifyReport verify_qk(std::uint64_t limit) {
    static const std::uint64_t kModuli[] = {1, 2, 6, 30, 210};
    VerifyReport report;
    report.suite = "qk";
    if (limit == 0) return report;
    SieveConfig config;
    config.segment_size = std::max<std::uint64_t>(limit, SieveConfig::kMinSegment);
    for (unsigned k : {2u, 3u}) {
        const SieveBlock block = sieve_qk(1, limit, k, config);
        for (std::uint64_t n : kModuli) {
            std::uint64_t brute = 0;
            for (std::uint64_t x = 1; x <= limit; ++x) {
                if (std::gcd(x, n) == 1) brute += std::uint64_t(block.at(x));
                ++report.checked;
                const std::uint64_t fast = qk_count(x, n, k);
                if (fast == brute) {
                    ++report.passed;
                } else if (!report.counterexample) {
                    report.counterexample = "x=" + std::to_string(x) + " n=" + std::to_string(n) + " k=" +
                                            std::to_string(k) + " qk_count=" + std::to_string(fast) +
                                            " sieve=" + std::to_string(brute);
                }
            }
        }
    }
    return report;
}

VerifyReport verify_sums(std::uint64_t limit, unsigned workers) {
    static const std::uint64_t kModuli[] = {1, 6, 30};
    static const std::vector<OrderPair> kOrders = {{2, 2}, {2, 3}, {2, 4}, {3, 3}, {3, 5}};
    std::vector<std::uint64_t> xs;
    for (std::uint64_t x = 1000; x <= limit; x *= 10) xs.push_back(x);
    if (xs.empty() && limit >= 1) xs.push_back(limit);

    SieveConfig config;
    config.worker_count = workers;
    VerifyReport report;
    report.suite = "sums";
    for (std::uint64_t x : xs) {
        for (const auto& order : kOrders) {
            for (std::uint64_t n : kModuli) {
                const SumQuery q{x, order, n};
                const std::int64_t direct = sum_direct(q, config);
                const std::int64_t conv = sum_convolution(q);
                ++report.checked;
                if (direct == conv) {
                    ++report.passed;
                } else if (!report.counterexample) {
                    report.counterexample = "x=" + std::to_string(x) + " order=" + order_str(order) + " n=" +
                                            std::to_string(n) + " direct=" + std::to_string(direct) +
                                            " convolution=" + std::to_string(conv);
                }
            }
        }
    }
    return report;
}

VerifyReport verify_constants(std::uint64_t prime_limit) {
    prime_limit = std::max<std::uint64_t>(prime_limit, 2);
    VerifyReport report;
    report.suite = "constants";
    auto record = [&](bool ok, const std::string& what) {
        ++report.checked;
        if (ok)
            ++report.passed;
        else if (!report.counterexample)
            report.counterexample = what;
    };
    for (unsigned k : {2u, 3u}) {
        const ConstantEstimate a = alpha(OrderPair::apostol(k), prime_limit);
        const ConstantEstimate z = zeta(k, 1e-12);
        const ConstantEstimate big_a = apostol_A(k, prime_limit);
        const double diff = std::fabs(a.value - z.value * big_a.value);
        const double bound = a.tail_bound + z.tail_bound * big_a.value + z.value * big_a.tail_bound +
                             z.tail_bound * big_a.tail_bound;
        record(diff <= bound, "k=" + std::to_string(k) + " |alpha_kk - zeta*A|=" + std::to_string(diff) +
                                  " exceeds bound " + std::to_string(bound));
    }
    for (const auto& order : verification_orders()) {
        const ConstantEstimate p1 = alpha(order, prime_limit);
        const ConstantEstimate p2 = alpha(order, 2 * prime_limit);
        record(std::fabs(p2.value - p1.value) <= p1.tail_bound && p1.value > 0.0 && p1.value < 1.0,
               "order=" + order_str(order) + " truncation not monotone at P=" + std::to_string(prime_limit));
    }
    return report;
}

std::vector<VerifyReport> run_suite(const std::string& name, std::uint64_t limit, unsigned workers) {
    std::vector<VerifyReport> out;
    const bool all = name == "all";
    bool matched = all;
    auto want = [&](const char* suite) {
        if (all || name == suite) {
            matched = true;
            return true;
        }
        return false;
    };
    if (want("lemma21")) out.push_back(verify_lemma21(limit));
    if (want("lemma24")) out.push_back(verify_lemma24(limit));
    if (want("apostol")) out.push_back(verify_apostol(limit));
    if (want("qk")) out.push_back(verify_qk(limit));
    if (want("sums")) out.push_back(verify_sums(limit, workers));
    if (want("constants")) out.push_back(verify_constants(limit));
    if (!matched) throw DomainError("unknown verification suite '" + name + "'");
    return out;
}

}  // namespace moebius::cli
