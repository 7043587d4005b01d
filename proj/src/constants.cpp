#include "moebius/constants.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "compensated_sum.hpp"
#include "moebius/error.hpp"
#include "moebius/primes.hpp"

namespace moebius {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

using detail::CompensatedSum;

// -log f(x) for a real x > 1, and a rigorous bound on sum_{p > P} -log f(p).
struct ProductSpec {
    std::function<double(double)> neg_log_factor;
    double tail_log_bound;
};

ConstantEstimate euler_product(std::uint64_t prime_limit, const ProductSpec& spec) {
    if (prime_limit < 2) throw DomainError("euler product: prime_limit must be >= 2");
    CompensatedSum log_sum;
    double magnitude = 0.0;
    for_each_prime(prime_limit, [&](std::uint32_t p) {
        const double g = spec.neg_log_factor(double(p));
        log_sum.add(-g);
        magnitude += g;
    });
    const double truncated = std::exp(log_sum.value());

    // Prime-density estimate of the tail, kept inside the rigorous range.
    const double lo = double(prime_limit);
    boost::math::quadrature::exp_sinh<double> integrator;
    auto density = [&](double x) { return x <= lo ? 0.0 : spec.neg_log_factor(x) / std::log(x); };
    double estimate = integrator.integrate(density, lo, std::numeric_limits<double>::infinity());
    if (!std::isfinite(estimate) || estimate < 0.0) estimate = 0.0;
    estimate = std::min(estimate, spec.tail_log_bound);

    // Each log term carries a few ulps of relative error, the compensated sum
    // a few more, and exp one more.
    const double rounding = truncated * (8.0 * kEps * magnitude + 4.0 * kEps);
    ConstantEstimate out;
    out.truncated = truncated;
    out.value = truncated * std::exp(-estimate);
    out.tail_bound = -truncated * std::expm1(-spec.tail_log_bound) + 2.0 * rounding;
    out.prime_limit = prime_limit;
    return out;
}

}  // namespace

ConstantEstimate zeta(unsigned k, double tol) {
    if (k < 2) throw DomainError("zeta: k must be >= 2");
    if (!(tol > 0.0)) throw DomainError("zeta: tol must be positive");
    // Values are below zeta(2) < 2; allow 16 ulps of that for summation.
    const double rounding = 32.0 * kEps;
    if (tol <= 2.0 * rounding)
        throw PrecisionError("zeta: tolerance is below the binary64 rounding floor");
    // Half-width of the tail enclosure is at most N^-k / 2.
    const double needed = std::ceil(std::pow(1.0 / (2.0 * (tol - rounding)), 1.0 / double(k)));
    if (!(needed <= double(kMaxZetaTerms)))
        throw PrecisionError("zeta: tolerance needs more than " + std::to_string(kMaxZetaTerms) + " terms");
    const auto terms = std::max<std::uint64_t>(1, std::uint64_t(needed));

    CompensatedSum sum;
    for (std::uint64_t n = terms; n >= 1; --n) sum.add(std::pow(double(n), -double(k)));
    const double km1 = double(k - 1);
    const double upper = std::pow(double(terms), 1.0 - double(k)) / km1;
    const double lower = std::pow(double(terms + 1), 1.0 - double(k)) / km1;

    ConstantEstimate out;
    out.truncated = sum.value();
    out.value = out.truncated + 0.5 * (upper + lower);
    out.tail_bound = 0.5 * (upper - lower) + rounding;
    out.prime_limit = terms;
    return out;
}

Rational euler_factor(std::uint64_t p, const OrderPair& order) {
    if (!is_prime(p)) throw DomainError("euler_factor: " + std::to_string(p) + " is not prime");
    i128 denom = 0;
    for (unsigned j = order.m() - order.k() + 1; j <= order.m(); ++j)
        denom = checked_add(denom, checked_pow(i128(p), j));
    return Rational(denom - 1, denom);
}

ConstantEstimate alpha(const OrderPair& order, std::uint64_t prime_limit) {
    const unsigned k = order.k();
    const unsigned m = order.m();
    ProductSpec spec;
    spec.neg_log_factor = [k, m](double x) {
        double denom = 0.0;
        for (unsigned j = m - k + 1; j <= m; ++j) denom += std::pow(x, double(j));
        return -std::log1p(-1.0 / denom);
    };
    spec.tail_log_bound = 2.0 * std::pow(double(prime_limit), 1.0 - double(m)) / double(m - 1);
    return euler_product(prime_limit, spec);
}

ConstantEstimate apostol_A(unsigned k, std::uint64_t prime_limit) {
    if (k < 2) throw DomainError("apostol_A: k must be >= 2");
    ProductSpec spec;
    spec.neg_log_factor = [k](double x) {
        const double t = 2.0 * std::pow(x, -double(k)) - std::pow(x, -double(k) - 1.0);
        return -std::log1p(-t);
    };
    spec.tail_log_bound = 4.0 * std::pow(double(prime_limit), 1.0 - double(k)) / double(k - 1);
    return euler_product(prime_limit, spec);
}

Rational alpha_n(const OrderPair& order, const FactoredInteger& n) {
    Rational acc(static_cast<i128>(n.value()));
    for (const auto& f : n.factors()) acc *= euler_factor(f.prime, order);
    return acc;
}

}  // namespace moebius
