#include <doctest.h>

#include <cmath>
#include <vector>

#include "moebius/asymptotics.hpp"
#include "moebius/error.hpp"
#include "moebius/summatory.hpp"

using namespace moebius;

namespace {

std::vector<ScanRow> synthetic(double (*f)(double)) {
    std::vector<ScanRow> rows;
    for (double x = 1e3; x <= 1e9; x *= 3.0) {
        ScanRow r;
        r.x = std::uint64_t(x);
        r.E = f(double(r.x));
        rows.push_back(r);
    }
    return rows;
}

}  // namespace

TEST_CASE("scan examples") {
    const std::uint64_t at12[] = {12};
    const auto rows = scan(OrderPair(2, 3), 1, at12);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].S == 7);
    CHECK(rows[0].E == doctest::Approx(7.0 - rows[0].M));
    CHECK_FALSE(rows[0].conjecture_mode);

    const std::uint64_t at1[] = {1};
    const auto one = scan(OrderPair(2, 3), 1, at1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].S == 1);

    const auto conj = conjecture_scan(2, 1, at12);
    CHECK(conj[0].S == 5);
    CHECK(conj[0].conjecture_mode);
}

TEST_CASE("scan S agrees with sum_direct and ratios are consistent") {
    const auto grid = geometric_grid(100, 1'000'000, 3);
    for (const OrderPair o : {OrderPair(2, 3), OrderPair(3, 4)}) {
        for (std::uint64_t n : {1ull, 6ull}) {
            const auto rows = scan(o, n, grid);
            REQUIRE(rows.size() == grid.size());
            for (const auto& r : rows) {
                CHECK(r.S == sum_direct({r.x, o, n}));
                CHECK(r.E == doctest::Approx(double(r.S) - r.M));
                const double k = o.k();
                const double factor = std::pow(double(r.x), 1.0 / k - 2.0 / (2.0 * k + 1.0));
                CHECK(r.ratio_rh == doctest::Approx(r.ratio_uncond * factor).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("scan rejects unsorted checkpoints") {
    const std::uint64_t bad[] = {100, 10};
    CHECK_THROWS(scan(OrderPair(2, 3), 1, bad));
}

TEST_CASE("fit_exponent on synthetic data") {
    const auto root = synthetic([](double x) { return std::sqrt(x); });
    const FitResult f = fit_exponent(root);
    CHECK(f.slope == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(f.residual_rms < 1e-9);
    CHECK(f.points_used == root.size());

    const FitResult flat = fit_exponent(synthetic([](double) { return -3.0; }));
    CHECK(std::fabs(flat.slope) < 1e-9);
    CHECK(flat.intercept == doctest::Approx(std::log(3.0)));

    const FitResult logged = fit_exponent(synthetic([](double x) { return std::pow(x, 0.4) * std::log(x); }));
    CHECK(logged.slope > 0.4);
    CHECK(logged.slope < 0.5);
}

TEST_CASE("fit_exponent skips tiny errors and needs three points") {
    auto rows = synthetic([](double x) { return std::sqrt(x); });
    rows[1].E = 0.0;
    rows[2].E = 1e-12;
    const FitResult f = fit_exponent(rows);
    CHECK(f.points_used == rows.size() - 2);
    CHECK(f.slope == doctest::Approx(0.5).epsilon(1e-9));

    std::vector<ScanRow> two(rows.begin(), rows.begin() + 2);
    two[1].E = 5.0;
    CHECK_THROWS_AS(fit_exponent(two), DomainError);
}

TEST_CASE("reference shapes") {
    const double ee = std::exp(std::exp(1.0));
    const ShapeParams p{1.0, 1.0};
    CHECK(reference_shape(ee, 2, p, Shape::delta) == doctest::Approx(std::exp(-std::pow(std::exp(1.0), 0.6))));
    CHECK(reference_shape(ee, 2, p, Shape::delta_k) ==
          doctest::Approx(std::exp(-std::pow(2.0, -1.6) * std::pow(std::exp(1.0), 0.6))));
    CHECK(reference_shape(ee, 2, p, Shape::omega) == doctest::Approx(std::exp(std::exp(1.0))));
    CHECK(reference_shape(1e6, 2, ShapeParams{1e-300, 1.0}, Shape::delta) == doctest::Approx(1.0));

    double last = 2.0;
    for (double x = 3.0; x < 1e30; x *= 7.0) {
        const double v = reference_shape(x, 3, p, Shape::delta);
        CHECK(v < last);
        last = v;
    }
    CHECK_THROWS_AS(reference_shape(2.5, 2, p, Shape::delta), DomainError);
    CHECK_THROWS_AS(reference_shape(10.0, 2, ShapeParams{-1.0, 1.0}, Shape::delta), DomainError);
}

TEST_CASE("geometric_grid") {
    const auto g = geometric_grid(1000, 1'000'000, 4);
    CHECK(g.size() == 13);
    CHECK(g.front() == 1000);
    CHECK(g.back() == 1'000'000);
    for (std::size_t i = 1; i < g.size(); ++i) CHECK(g[i] > g[i - 1]);
    CHECK(geometric_grid(12, 12, 4) == std::vector<std::uint64_t>{12});
    const auto dense = geometric_grid(1, 10, 50);
    CHECK(dense.front() == 1);
    CHECK(dense.back() == 10);
    for (std::size_t i = 1; i < dense.size(); ++i) CHECK(dense[i] > dense[i - 1]);
}
