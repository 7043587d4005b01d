#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "moebius/arith.hpp"
#include "moebius/constants.hpp"
#include "moebius/sieve.hpp"

namespace moebius {

/// One checkpoint of an error-term scan: S(x), the main term M(x),
/// E = S - M and E normalized by x^(1/k) and by x^(2/(2k+1)).
struct ScanRow {
    std::uint64_t x = 0;
    std::int64_t S = 0;
    double M = 0.0;
    double E = 0.0;
    double ratio_uncond = 0.0;
    double ratio_rh = 0.0;
    // m == k: the main term is the conjectured one, not a theorem.
    bool conjecture_mode = false;
};

/// Least-squares line through (log x, log |E|).
struct FitResult {
    double slope = 0.0;
    double intercept = 0.0;
    std::size_t points_used = 0;
    double residual_rms = 0.0;
};

/// User-supplied constants for the reference shapes: A for delta and
/// delta_k, B for omega and omega_k.
struct ShapeParams {
    double A = 1.0;
    double B = 1.0;
};

enum class Shape { delta, delta_k, omega, omega_k };

inline constexpr double kFitMinAbsError = 1e-9;

struct ScanSettings {
    std::uint64_t prime_limit = kDefaultPrimeLimit;
    double tol = 1e-12;
    SieveConfig sieve;
};

/// One streaming pass for S and a single set of constants for M.
std::vector<ScanRow> scan(const OrderPair& order, std::uint64_t coprime_to, std::span<const std::uint64_t> checkpoints,
                          const ScanSettings& settings = {});

/// scan with order (k, k).
std::vector<ScanRow> conjecture_scan(unsigned k, std::uint64_t coprime_to, std::span<const std::uint64_t> checkpoints,
                                     const ScanSettings& settings = {});

/// Rows with |E| < 1e-9 are skipped. DomainError with fewer than 3 usable rows.
FitResult fit_exponent(std::span<const ScanRow> rows);

/// delta(x)   = exp(-A log^(3/5) x (log log x)^(-1/5))
/// delta_k(x) = exp(-A k^(-8/5) log^(3/5) x (log log x)^(-1/5))
/// omega(x)   = exp(B log x (log log x)^(-1)), omega_k the same with B read
/// as B_k. Requires x >= 3 and positive constants.
double reference_shape(double x, unsigned k, const ShapeParams& params, Shape which);

/// Geometric checkpoints from `from` to `to`, `per_decade` per factor of 10,
/// both endpoints included, rounded to integers and deduplicated.
std::vector<std::uint64_t> geometric_grid(std::uint64_t from, std::uint64_t to, unsigned per_decade);

}  // namespace moebius
