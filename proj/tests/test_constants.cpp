#include <doctest.h>

#include <cmath>
#include <numbers>

#include "moebius/constants.hpp"
#include "moebius/error.hpp"
#include "moebius/primes.hpp"

using namespace moebius;

namespace {

// High-precision references from tests/oracles/gen_values.py (mpmath prime
// zeta, independent of the product code here).
constexpr double kApostolA2 = 0.42824950567709444022;
constexpr double kApostolA3 = 0.74469549790606742044;
constexpr double kAlpha23 = 0.88151383972517077693;
constexpr double kAlpha22 = 0.70444220099916559274;
constexpr double kZeta3 = 1.2020569031595942854;

}  // namespace

TEST_CASE("zeta") {
    const ConstantEstimate z2 = zeta(2, 1e-12);
    CHECK(z2.tail_bound <= 1e-12);
    CHECK(std::fabs(z2.value - std::numbers::pi * std::numbers::pi / 6.0) <= 1e-12);

    const ConstantEstimate z3 = zeta(3, 1e-10);
    CHECK(z3.tail_bound <= 1e-10);
    CHECK(std::fabs(z3.value - kZeta3) <= z3.tail_bound);
    // A looser run agrees within the looser bound.
    const ConstantEstimate z3_loose = zeta(3, 1e-6);
    CHECK(z3_loose.prime_limit < z3.prime_limit);
    CHECK(std::fabs(z3_loose.value - z3.value) <= z3_loose.tail_bound + z3.tail_bound);

    CHECK_THROWS_AS(zeta(2, 1e-300), PrecisionError);
    CHECK_THROWS_AS(zeta(2, 1e-17), PrecisionError);
    CHECK_THROWS_AS(zeta(1, 1e-6), DomainError);
    CHECK_THROWS_AS(zeta(2, 0.0), DomainError);
}

TEST_CASE("euler_factor") {
    CHECK(euler_factor(2, OrderPair(2, 3)) == Rational(11, 12));
    CHECK(euler_factor(3, OrderPair(2, 3)) == Rational(35, 36));
    CHECK(euler_factor(2, OrderPair(2, 2)) == Rational(5, 6));
    CHECK_THROWS_AS(euler_factor(4, OrderPair(2, 3)), DomainError);
    CHECK_THROWS_AS(euler_factor(1000003, OrderPair(2, 12)), PrecisionError);
}

TEST_CASE("euler_factor equals 1 - 1/(p^(m-1) psi_k(p))") {
    for (std::uint32_t p : primes_up_to(10000)) {
        for (unsigned k = 2; k <= 4; ++k) {
            for (unsigned m = k; m <= k + 4; ++m) {
                const OrderPair o(k, m);
                const Rational via_psi =
                    Rational(1) - (Rational(checked_pow(p, m - 1)) * psi_k(p, k)).reciprocal();
                if (euler_factor(p, o) != via_psi) FAIL("p=", p, " k=", k, " m=", m);
            }
        }
    }
}

TEST_CASE("alpha against independent references") {
    const ConstantEstimate a23 = alpha(OrderPair(2, 3), 1'000'000);
    CHECK(std::fabs(a23.value - kAlpha23) <= a23.tail_bound);
    CHECK(std::fabs(a23.truncated - kAlpha23) <= a23.tail_bound);
    CHECK(a23.truncated >= kAlpha23);
    CHECK(std::fabs(a23.value - kAlpha23) <= 1e-12);

    const ConstantEstimate a22 = alpha(OrderPair(2, 2), 1'000'000);
    CHECK(std::fabs(a22.value - kAlpha22) <= a22.tail_bound);
    CHECK(std::fabs(a22.value - kAlpha22) <= 1e-10);

    const ConstantEstimate A2 = apostol_A(2, 1'000'000);
    CHECK(std::fabs(A2.value - kApostolA2) <= A2.tail_bound);
    CHECK(std::fabs(A2.value - kApostolA2) <= 1e-10);
    const ConstantEstimate A3 = apostol_A(3, 1'000'000);
    CHECK(std::fabs(A3.value - kApostolA3) <= A3.tail_bound);
    CHECK(A3.value > A2.value);
}

TEST_CASE("alpha_{k,k} = zeta(k) A_k within reported bounds") {
    for (unsigned k : {2u, 3u}) {
        const ConstantEstimate a = alpha(OrderPair::apostol(k), 1'000'000);
        const ConstantEstimate z = zeta(k, 1e-12);
        const ConstantEstimate big = apostol_A(k, 1'000'000);
        const double diff = std::fabs(a.value - z.value * big.value);
        CHECK(diff <= a.tail_bound + z.tail_bound * big.value + z.value * big.tail_bound);
        CHECK(diff <= 1e-8);
    }
}

TEST_CASE("doubling the prime limit stays within the tail bound") {
    for (const OrderPair o : {OrderPair(2, 2), OrderPair(2, 3), OrderPair(2, 4), OrderPair(3, 3), OrderPair(3, 5),
                              OrderPair(4, 6)}) {
        for (std::uint64_t P : {10ull, 1000ull, 100000ull}) {
            const ConstantEstimate one = alpha(o, P);
            const ConstantEstimate two = alpha(o, 2 * P);
            CHECK(std::fabs(two.value - one.value) <= one.tail_bound);
            CHECK(std::fabs(two.truncated - one.truncated) <= one.tail_bound);
            CHECK(two.tail_bound < one.tail_bound);
            CHECK(one.value > 0.0);
            CHECK(one.value < 1.0);
        }
    }
    for (unsigned k : {2u, 3u}) {
        const ConstantEstimate one = apostol_A(k, 5000);
        const ConstantEstimate two = apostol_A(k, 10000);
        CHECK(std::fabs(two.value - one.value) <= one.tail_bound);
        CHECK(two.tail_bound < one.tail_bound);
    }
}

TEST_CASE("single-factor and large-m products") {
    const ConstantEstimate a = apostol_A(2, 2);
    CHECK(a.truncated == doctest::Approx(1.0 - 2.0 / 4.0 + 1.0 / 8.0));
    CHECK(a.tail_bound > 0.1);
    CHECK(std::fabs(a.value - kApostolA2) <= a.tail_bound);

    const ConstantEstimate big_m = alpha(OrderPair(2, 12), 100000);
    const double first = 1.0 - 1.0 / (2048.0 + 4096.0);
    CHECK(big_m.value == doctest::Approx(first).epsilon(1e-5));
    CHECK(big_m.value < first);

    CHECK_THROWS_AS(alpha(OrderPair(2, 3), 1), DomainError);
    CHECK_THROWS_AS(apostol_A(1, 100), DomainError);
}

TEST_CASE("alpha_n") {
    CHECK(alpha_n(OrderPair(2, 3), factorize(1)) == Rational(1));
    CHECK(alpha_n(OrderPair(2, 3), factorize(6)) == Rational(385, 72));
    CHECK(alpha_n(OrderPair(2, 2), factorize(2)) == Rational(5, 3));
}
