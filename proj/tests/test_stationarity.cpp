#include "catch_amalgamated.hpp"

#include "fixture.hpp"
#include "reference_values.hpp"

#include <bj/error.hpp>
#include <bj/stationarity.hpp>

#include <cmath>

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using namespace bj;
namespace pub = bj::testing::published;

namespace {

void check_report(const TestReport& r, const pub::Test& expected, double stat_tol) {
    CHECK_THAT(r.statistic, WithinAbs(expected.statistic, stat_tol));
    CHECK(r.lag == expected.lag);
    if (expected.clamped_low) {
        CHECK(r.clamped == Clamp::at_lower);
        CHECK(r.p_value == expected.p_value);
    } else {
        CHECK(r.clamped == Clamp::none);
        CHECK_THAT(r.p_value, WithinAbs(expected.p_value, 0.01));
    }
}

}  // namespace

TEST_CASE("default lag formulas", "[stationarity]") {
    CHECK(default_adf_lag(39) == 3);
    CHECK(default_adf_lag(38) == 3);
    CHECK(default_adf_lag(200) == 5);
    CHECK(short_truncation_lag(39) == 3);
    CHECK(short_truncation_lag(38) == 3);
    CHECK(short_truncation_lag(100) == 4);
    CHECK(short_truncation_lag(200) == 4);
}

TEST_CASE("fixture unit-root tests match the published statistics", "[stationarity]") {
    const auto x = testing::ipr_series().values();
    SECTION("augmented Dickey-Fuller") {
        const auto r = adf_test(x);
        check_report(r, pub::kAdf, 0.005);
        CHECK(r.kind == TestKind::adf);
        CHECK(r.null_hypothesis == NullHypothesis::unit_root);
    }
    SECTION("KPSS level") {
        const auto r = kpss_test(x, KpssNull::level);
        check_report(r, pub::kKpss, 0.005);
        CHECK(r.kind == TestKind::kpss);
        CHECK(r.null_hypothesis == NullHypothesis::stationary);
    }
}

TEST_CASE("residual tests match the published statistics", "[stationarity]") {
    const auto res = testing::ipr_model().residuals.values();
    SECTION("ADF with one lag") {
        const auto r = adf_test(res, 1);
        CHECK_THAT(r.statistic, WithinRel(pub::kResidualAdf.statistic, 0.005));
        check_report(r, pub::kResidualAdf, 0.03);
    }
    SECTION("Phillips-Perron") {
        const auto r = pp_test(res);
        CHECK_THAT(r.statistic, WithinRel(pub::kResidualPp.statistic, 0.005));
        check_report(r, pub::kResidualPp, 0.25);
        CHECK(r.kind == TestKind::pp);
        CHECK(r.null_hypothesis == NullHypothesis::unit_root);
    }
    SECTION("KPSS level") {
        const auto r = kpss_test(res);
        CHECK_THAT(r.statistic, WithinRel(pub::kResidualKpss.statistic, 0.005));
        check_report(r, pub::kResidualKpss, 0.005);
    }
}

TEST_CASE("ADF statistic is scale invariant", "[stationarity]") {
    const auto x = testing::random_walk(80, 9);
    const double base = adf_test(x).statistic;
    for (double a : {-2.0, 1e-3, 250.0}) {
        std::vector<double> y(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) y[i] = a * x[i];
        CHECK_THAT(adf_test(y).statistic, WithinAbs(base, 1e-8));
    }
}

TEST_CASE("KPSS level statistic ignores a constant shift", "[stationarity]") {
    const auto x = testing::white_noise(60, 4);
    const double base = kpss_test(x).statistic;
    std::vector<double> y(x);
    for (auto& v : y) v += 1234.5;
    CHECK_THAT(kpss_test(y).statistic, WithinAbs(base, 1e-10));
}

TEST_CASE("Phillips-Perron correction vanishes without serial correlation", "[stationarity]") {
    // Residuals of the Dickey-Fuller regression on a white-noise series have
    // short-run and long-run variances that nearly coincide.
    const auto x = testing::white_noise(400, 21);
    const auto d = pp_statistics(x);
    CHECK_THAT(d.z_alpha, WithinRel(d.normalized_bias, 0.05));
}

TEST_CASE("p-values are clamped at the table edges", "[stationarity]") {
    SECTION("strongly stationary input") {
        const auto r = adf_test(testing::white_noise(200, 2));
        CHECK(r.clamped == Clamp::at_lower);
        CHECK(r.p_value == 0.01);
    }
    SECTION("trending input for KPSS") {
        std::vector<double> x(100);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = static_cast<double>(i) + std::sin(static_cast<double>(i));
        const auto r = kpss_test(x);
        CHECK(r.clamped == Clamp::at_lower);
        CHECK(r.p_value == 0.01);
    }
    SECTION("white noise under KPSS") {
        const auto r = kpss_test(testing::white_noise(200, 8));
        CHECK(r.p_value <= 0.10);
        CHECK(r.p_value >= 0.01);
    }
}

TEST_CASE("KPSS trend null", "[stationarity]") {
    std::vector<double> x = testing::white_noise(120, 31);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += 0.05 * static_cast<double>(i);
    // A linear trend plus noise is trend stationary but not level stationary.
    CHECK(kpss_test(x, KpssNull::trend).p_value > 0.05);
    CHECK(kpss_test(x, KpssNull::level).p_value < 0.05);
}

TEST_CASE("Bartlett long-run variance", "[stationarity]") {
    const std::vector<double> u{1.0, -2.0, 0.5, 1.5, -1.0};
    // gamma_0 = 8.5/5, gamma_1 = (-2 - 1 + 0.75 - 1.5)/5
    const double g0 = 8.5 / 5.0;
    const double g1 = -3.75 / 5.0;
    CHECK_THAT(bartlett_long_run_variance(u, 0), WithinAbs(g0, 1e-14));
    CHECK_THAT(bartlett_long_run_variance(u, 1), WithinAbs(g0 + 2.0 * 0.5 * g1, 1e-14));
}

TEST_CASE("stationarity argument errors", "[stationarity]") {
    CHECK_THROWS_AS(adf_test(std::vector<double>{1, 2, 3, 4, 5}, 4), InvalidArgument);
    CHECK_THROWS_AS(adf_test(std::vector<double>(30, 1.0), -1), InvalidArgument);
    CHECK_THROWS_AS(pp_test(std::vector<double>{1, 2, 3}), InvalidArgument);
    CHECK_THROWS_AS(kpss_test(std::vector<double>{1, 2, 3}), InvalidArgument);
    CHECK_THROWS_AS(adf_test(std::vector<double>(30, 1.0)), ComputeError);
}
