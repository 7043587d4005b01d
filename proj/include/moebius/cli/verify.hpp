#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "moebius/arith.hpp"

namespace moebius::cli {

struct VerifyReport {
    std::string suite;
    std::uint64_t checked = 0;
    std::uint64_t passed = 0;
    std::optional<std::string> counterexample;

    bool ok() const { return checked == passed; }
};

/// Runs `check` on 1..limit. `check` returns an empty string on success or
/// a description of the failure; the first failure is kept.
VerifyReport verify_range(std::string suite, std::uint64_t limit,
                          const std::function<std::string(std::uint64_t)>& check);

/// mu_{k,m}(n) against sum over delta d^m = n, gcd(d, delta) = 1 of
/// mu(d) q_k(delta), found by direct divisor enumeration.
std::int64_t lemma21_convolution(std::uint64_t n, const OrderPair& order);

/// Orders exercised by the verification suites.
const std::vector<OrderPair>& verification_orders();

VerifyReport verify_lemma21(std::uint64_t limit);
VerifyReport verify_lemma24(std::uint64_t limit);
VerifyReport verify_apostol(std::uint64_t limit);
VerifyReport verify_qk(std::uint64_t limit);
VerifyReport verify_sums(std::uint64_t limit, unsigned workers = 1);
VerifyReport verify_constants(std::uint64_t prime_limit);

inline const std::vector<std::string> kSuiteNames = {"lemma21", "lemma24", "apostol", "qk", "sums", "constants"};

/// One named suite, or all of them for "all". DomainError on unknown names.
std::vector<VerifyReport> run_suite(const std::string& name, std::uint64_t limit, unsigned workers = 1);

}  // namespace moebius::cli
