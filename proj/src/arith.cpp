#include "moebius/arith.hpp"

#include <cmath>
#include <string>

#include "moebius/error.hpp"

namespace moebius {

namespace {

void require_k(unsigned k, const char* what) {
    if (k < 2) throw DomainError(std::string(what) + ": k must be >= 2");
}

}  // namespace

OrderPair::OrderPair(unsigned k, unsigned m) : k_(k), m_(m) {
    if (k < 2) throw DomainError("OrderPair: k must be >= 2");
    if (m < k) throw DomainError("OrderPair: m must be >= k");
}

FunctionValue mu_km_prime_power(unsigned exponent, const OrderPair& order) {
    if (exponent < order.k()) return 1;
    if (exponent < order.m()) return 0;
    if (exponent == order.m()) return -1;
    return 0;
}

FunctionValue mu(const FactoredInteger& n) {
    FunctionValue v = 1;
    for (const auto& f : n.factors()) {
        if (f.exponent > 1) return 0;
        v = FunctionValue(-v);
    }
    return v;
}

FunctionValue mu(std::uint64_t n) { return mu(factorize(n)); }

FunctionValue mu_apostol(const FactoredInteger& n, unsigned k) {
    require_k(k, "mu_apostol");
    if (n.value() == 1) return 1;
    unsigned r = 0;
    for (const auto& f : n.factors()) {
        if (f.exponent > k) return 0;
        if (f.exponent == k) ++r;
    }
    return r % 2 == 0 ? 1 : -1;
}

FunctionValue mu_apostol(std::uint64_t n, unsigned k) { return mu_apostol(factorize(n), k); }

FunctionValue mu_km(const FactoredInteger& n, const OrderPair& order) {
    FunctionValue v = 1;
    for (const auto& f : n.factors()) {
        v = FunctionValue(v * mu_km_prime_power(f.exponent, order));
        if (v == 0) break;
    }
    return v;
}

FunctionValue mu_km(std::uint64_t n, const OrderPair& order) { return mu_km(factorize(n), order); }

FunctionValue q_k(const FactoredInteger& n, unsigned k) {
    require_k(k, "q_k");
    for (const auto& f : n.factors())
        if (f.exponent >= k) return 0;
    return 1;
}

FunctionValue q_k(std::uint64_t n, unsigned k) { return q_k(factorize(n), k); }

std::uint64_t theta(const FactoredInteger& n) { return std::uint64_t(1) << n.omega(); }

std::uint64_t theta(std::uint64_t n) { return theta(factorize(n)); }

Rational psi_k(const FactoredInteger& n, unsigned k) {
    if (k < 1) throw DomainError("psi_k: k must be >= 1");
    // p^e * (1 + 1/p + ... + 1/p^(k-1)) = p^(e-k+1) * (p^(k-1) + ... + 1).
    Rational acc(1);
    for (const auto& [p, e] : n.factors()) {
        i128 geometric = 0;
        for (unsigned j = 0; j < k; ++j) geometric = checked_add(geometric, checked_pow(i128(p), j));
        const int shift = int(e) - int(k) + 1;
        const i128 scale = checked_pow(i128(p), unsigned(shift >= 0 ? shift : -shift));
        acc *= shift >= 0 ? Rational(checked_mul(scale, geometric)) : Rational(geometric, scale);
    }
    return acc;
}

Rational psi_k(std::uint64_t n, unsigned k) { return psi_k(factorize(n), k); }

double psi_k_prime(std::uint64_t p, unsigned k) {
    const double inv = 1.0 / double(p);
    double geometric = 0.0;
    double term = 1.0;
    for (unsigned j = 0; j < k; ++j) {
        geometric += term;
        term *= inv;
    }
    return double(p) * geometric;
}

Rational sigma_star(const FactoredInteger& n, int alpha) {
    if (alpha > 0) throw DomainError("sigma_star: exact path requires alpha <= 0");
    Rational acc(1);
    for (const auto& f : n.factors()) {
        const i128 pw = checked_pow(i128(f.prime), unsigned(-alpha));
        acc *= Rational(checked_add(pw, 1), pw);
    }
    return acc;
}

double sigma_star(const FactoredInteger& n, double alpha) {
    double acc = 1.0;
    for (const auto& f : n.factors()) acc *= 1.0 + std::pow(double(f.prime), alpha);
    return acc;
}

}  // namespace moebius
