#include "catch_amalgamated.hpp"

#include "fixture.hpp"
#include "oracles.hpp"
#include "reference_values.hpp"

#include <bj/correlation.hpp>
#include <bj/error.hpp>

#include <cmath>

using Catch::Matchers::WithinAbs;
using namespace bj;
namespace pub = bj::testing::published;

TEST_CASE("acf basics", "[correlation]") {
    SECTION("lag zero is one") {
        const auto rows = acf(testing::white_noise(30, 3), 5);
        REQUIRE(rows.size() == 6);
        CHECK(rows[0].lag == 0);
        CHECK(rows[0].value == 1.0);
        for (const auto& r : rows) CHECK(std::abs(r.value) <= 1.0);
    }
    SECTION("alternating series") {
        // Mean 0, sum of squares 6, lag-1 cross products 5 * (-1).
        const std::vector<double> x{1, -1, 1, -1, 1, -1};
        const auto rows = acf(x, 2);
        CHECK_THAT(rows[1].value, WithinAbs(-5.0 / 6.0, 1e-15));
        CHECK_THAT(rows[2].value, WithinAbs(4.0 / 6.0, 1e-15));
    }
    SECTION("errors") {
        CHECK_THROWS_AS(acf(std::vector<double>{2, 2, 2, 2}, 1), DegenerateSeries);
        CHECK_THROWS_AS(acf(std::vector<double>{1, 2, 3}, 3), InvalidArgument);
        CHECK_THROWS_AS(acf(std::vector<double>{1, 2, 3}, 0), InvalidArgument);
    }
}

TEST_CASE("acf matches direct evaluation and is affine invariant", "[correlation]") {
    const auto x = testing::white_noise(45, 17);
    const auto r = autocorrelations(x, 10);
    std::vector<double> y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = -3.5 * x[i] + 12.0;
    const auto ry = autocorrelations(y, 10);
    for (std::size_t k = 0; k <= 10; ++k) {
        CHECK_THAT(r[k], WithinAbs(testing::direct_autocorrelation(x, k), 1e-12));
        CHECK_THAT(ry[k], WithinAbs(r[k], 1e-10));
    }
}

TEST_CASE("fixture correlograms match the published values", "[correlation]") {
    const auto& ts = testing::ipr_series();
    const auto a = acf(ts, 15);
    const auto p = pacf(ts, 15);
    REQUIRE(a.size() == 16);
    REQUIRE(p.size() == 15);
    for (std::size_t k = 1; k <= 15; ++k) {
        INFO("lag " << k);
        CHECK_THAT(a[k].value, WithinAbs(pub::kAcf[k - 1], 1e-3));
        CHECK(p[k - 1].lag == static_cast<int>(k));
        CHECK_THAT(p[k - 1].value, WithinAbs(pub::kPacf[k - 1], 1e-3));
    }
}

TEST_CASE("published lag-11 autocorrelation sign", "[correlation]") {
    // The printed value is +0.157; the data and the plotted bar say negative.
    const double r11 = acf(testing::ipr_series(), 11)[11].value;
    CHECK(r11 < 0);
    CHECK_THAT(r11, WithinAbs(-0.157, 1e-3));
}

TEST_CASE("pacf lag one equals acf lag one", "[correlation]") {
    const auto x = testing::white_noise(25, 5);
    CHECK(pacf(x, 3)[0].value == acf(x, 3)[1].value);
}

TEST_CASE("Durbin-Levinson agrees with Yule-Walker solves", "[correlation]") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const std::size_t n = 10 + static_cast<std::size_t>(seed * 2);
        auto x = testing::white_noise(n, seed);
        for (std::size_t i = 1; i < n; ++i) x[i] += 0.6 * x[i - 1];
        const int max_lag = static_cast<int>(std::min<std::size_t>(8, n - 2));
        const auto p = pacf(x, max_lag);
        for (int k = 1; k <= max_lag; ++k) {
            INFO("seed " << seed << " lag " << k);
            CHECK_THAT(p[static_cast<std::size_t>(k - 1)].value, WithinAbs(testing::yule_walker_pacf(x, k), 1e-8));
        }
    }
}

TEST_CASE("lag-2 partial autocorrelation from the conditional form", "[correlation]") {
    const std::vector<double> x{2.0, -1.0, 0.5, 3.0, -2.0, 1.0};
    const double r1 = testing::direct_autocorrelation(x, 1);
    const double r2 = testing::direct_autocorrelation(x, 2);
    const double expected = (r2 - r1 * r1) / (1.0 - r1 * r1);
    CHECK_THAT(pacf(x, 2)[1].value, WithinAbs(expected, 1e-12));
}

TEST_CASE("significance bounds", "[correlation]") {
    CHECK_THAT(significance_bound(100), WithinAbs(0.196, 1e-3));
    CHECK_THAT(significance_bound(39), WithinAbs(0.3139, 1e-3));
    CHECK_THAT(significance_bound(38), WithinAbs(0.3180, 1e-3));
    CHECK_THAT(significance_bound(39), WithinAbs(1.959963984540054 / std::sqrt(39.0), 1e-12));
}

TEST_CASE("normal quantile and cdf", "[correlation]") {
    CHECK_THAT(normal_quantile(0.975), WithinAbs(1.959963984540054, 1e-12));
    CHECK_THAT(normal_quantile(0.995), WithinAbs(2.5758293035489, 1e-12));
    CHECK_THAT(normal_quantile(0.5), WithinAbs(0.0, 1e-15));
    CHECK_THAT(normal_quantile(1e-10), WithinAbs(-6.361340902404056, 1e-9));
    for (double p : {0.001, 0.2, 0.7, 0.9999}) CHECK_THAT(normal_cdf(normal_quantile(p)), WithinAbs(p, 1e-12));
}
