#include "moebius/asymptotics.hpp"

#include <cmath>

#include "moebius/error.hpp"
#include "moebius/summatory.hpp"

namespace moebius {

std::vector<ScanRow> scan(const OrderPair& order, std::uint64_t coprime_to, std::span<const std::uint64_t> checkpoints,
                          const ScanSettings& settings) {
    if (checkpoints.empty()) throw DomainError("scan: at least one checkpoint required");
    if (checkpoints.front() < 1) throw RangeError("scan: checkpoints must be >= 1");

    const std::vector<PartialSum> sums =
        stream_sum(checkpoints.back(), order, coprime_to, checkpoints, settings.sieve);
    // Main term per unit x, from one set of constants for the whole scan.
    const double density = main_term(SumQuery{1, order, coprime_to}, settings.prime_limit, settings.tol).main;

    const double k = order.k();
    std::vector<ScanRow> rows;
    rows.reserve(sums.size());
    for (const auto& [x, s] : sums) {
        ScanRow row;
        row.x = x;
        row.S = s;
        row.M = double(x) * density;
        row.E = double(s) - row.M;
        row.ratio_uncond = row.E / std::pow(double(x), 1.0 / k);
        row.ratio_rh = row.E / std::pow(double(x), 2.0 / (2.0 * k + 1.0));
        row.conjecture_mode = order.is_apostol();
        rows.push_back(row);
    }
    return rows;
}

std::vector<ScanRow> conjecture_scan(unsigned k, std::uint64_t coprime_to, std::span<const std::uint64_t> checkpoints,
                                     const ScanSettings& settings) {
    return scan(OrderPair::apostol(k), coprime_to, checkpoints, settings);
}

FitResult fit_exponent(std::span<const ScanRow> rows) {
    std::vector<double> xs;
    std::vector<double> ys;
    for (const auto& r : rows) {
        if (!(std::fabs(r.E) >= kFitMinAbsError) || r.x < 1) continue;
        xs.push_back(std::log(double(r.x)));
        ys.push_back(std::log(std::fabs(r.E)));
    }
    if (xs.size() < 3) throw DomainError("fit_exponent: fewer than 3 usable rows");

    const double count = double(xs.size());
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= count;
    my /= count;
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    if (sxx == 0.0) throw DomainError("fit_exponent: all usable rows share one x");

    FitResult fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    fit.points_used = xs.size();
    double ss = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double res = ys[i] - (fit.intercept + fit.slope * xs[i]);
        ss += res * res;
    }
    fit.residual_rms = std::sqrt(ss / count);
    return fit;
}

double reference_shape(double x, unsigned k, const ShapeParams& params, Shape which) {
    if (!(x >= 3.0)) throw DomainError("reference_shape: x must be >= 3");
    if (!(params.A > 0.0) || !(params.B > 0.0)) throw DomainError("reference_shape: A and B must be positive");
    if (k < 1) throw DomainError("reference_shape: k must be >= 1");
    const double lx = std::log(x);
    const double llx = std::log(lx);
    switch (which) {
        case Shape::delta:
            return std::exp(-params.A * std::pow(lx, 0.6) * std::pow(llx, -0.2));
        case Shape::delta_k:
            return std::exp(-params.A * std::pow(double(k), -1.6) * std::pow(lx, 0.6) * std::pow(llx, -0.2));
        case Shape::omega:
        case Shape::omega_k:
            return std::exp(params.B * lx / llx);
    }
    throw DomainError("reference_shape: unknown shape");
}

std::vector<std::uint64_t> geometric_grid(std::uint64_t from, std::uint64_t to, unsigned per_decade) {
    if (from < 1 || to < from) throw DomainError("geometric_grid: require 1 <= from <= to");
    if (per_decade < 1) throw DomainError("geometric_grid: points per decade must be >= 1");
    std::vector<std::uint64_t> grid;
    const double span = std::log10(double(to) / double(from));
    const auto steps = std::uint64_t(std::floor(span * per_decade + 1e-9));
    for (std::uint64_t i = 0; i <= steps; ++i) {
        const double v = double(from) * std::pow(10.0, double(i) / double(per_decade));
        auto x = std::uint64_t(std::llround(v));
        if (std::fabs(v - double(to)) <= 1e-9 * double(to)) x = to;
        x = std::min(std::max(x, from), to);
        if (grid.empty() || grid.back() < x) grid.push_back(x);
    }
    if (grid.back() < to) grid.push_back(to);
    return grid;
}

}  // namespace moebius
