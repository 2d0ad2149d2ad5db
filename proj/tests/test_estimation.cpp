#include "catch_amalgamated.hpp"

#include "fixture.hpp"
#include "oracles.hpp"
#include "reference_values.hpp"

#include <bj/correlation.hpp>
#include <bj/error.hpp>
#include <bj/estimation.hpp>
#include <bj/kalman.hpp>
#include <bj/polynomial.hpp>

#include <chrono>
#include <cmath>
#include <numeric>

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using namespace bj;
using bj::testing::arima;
namespace pub = bj::testing::published;

namespace {

// Twenty draws of a zero-mean AR(1) with coefficient 0.6, rounded to three
// decimals so the data are easy to reproduce by hand.
const std::vector<double> kAr1Series{0.412,  1.105,  0.833, -0.251, -0.967, -0.402, 0.311,  1.548, 1.977, 0.864,
                                     -0.320, -1.143, -0.586, 0.097,  0.905,  0.244, -0.733, -1.290, -0.402, 0.651};

double concentrated_closed_form(std::span<const double> y, double phi) {
    double s = (1.0 - phi * phi) * y[0] * y[0];
    for (std::size_t t = 1; t < y.size(); ++t) s += (y[t] - phi * y[t - 1]) * (y[t] - phi * y[t - 1]);
    return testing::ar1_loglik_closed_form(y, phi, s / static_cast<double>(y.size()));
}

}  // namespace

TEST_CASE("Kalman likelihood equals the AR(1) closed form", "[estimation]") {
    const std::vector<double> y{0.3, -0.8, 1.2, 0.4, -0.1, -1.5, 0.9, 0.2, 0.6, -0.4};
    const auto order = arima(1, 0, 0);
    for (double phi : {0.5, -0.7, 0.0, 0.95}) {
        for (double s2 : {1.0, 0.37}) {
            const std::vector<double> params{phi, s2};
            CHECK_THAT(loglikelihood(y, order, params), WithinAbs(testing::ar1_loglik_closed_form(y, phi, s2), 1e-10));
        }
    }
}

TEST_CASE("AR(1) with zero coefficient reduces to independent normals", "[estimation]") {
    const auto y = testing::white_noise(15, 77);
    double expected = 0;
    for (double v : y) expected += testing::normal_log_density(v, 0.0, 1.0);
    const std::vector<double> params{0.0, 1.0};
    CHECK_THAT(loglikelihood(y, arima(1, 0, 0), params), WithinAbs(expected, 1e-10));
}

TEST_CASE("Kalman likelihood equals the innovations algorithm for ARMA(1,1)", "[estimation]") {
    const std::vector<double> y{0.52, -0.31, 1.07, 0.88, -0.45, -1.21, 0.14, 0.66};
    const auto order = arima(1, 0, 1);
    for (auto [phi, theta, s2] : {std::tuple{0.6, 0.3, 1.0}, std::tuple{-0.4, 0.7, 2.5}, std::tuple{0.9, -0.8, 0.1}}) {
        const auto gamma = testing::arma11_autocovariance(phi, theta, s2, y.size());
        const std::vector<double> params{phi, theta, s2};
        CHECK_THAT(loglikelihood(y, order, params), WithinAbs(testing::innovations_loglik(y, gamma), 1e-8));
    }
}

TEST_CASE("seasonal ARMA likelihood equals the innovations algorithm", "[estimation]") {
    // (1 - 0.5 B^4) y_t = e_t has gamma(4j) = 0.5^j / (1 - 0.25), zero elsewhere.
    const auto y = testing::white_noise(14, 5);
    std::vector<double> gamma(y.size(), 0.0);
    for (std::size_t h = 0; h < gamma.size(); h += 4) gamma[h] = std::pow(0.5, static_cast<double>(h / 4)) / 0.75;
    ModelOrder o;
    o.P = 1;
    o.s = 4;
    const std::vector<double> params{0.5, 1.0};
    CHECK_THAT(loglikelihood(y, o, params), WithinAbs(testing::innovations_loglik(y, gamma), 1e-8));
}

TEST_CASE("AR(1) fit agrees with a grid search of the closed form", "[estimation]") {
    const auto m = fit(TimeSeries(kAr1Series), arima(1, 0, 0));
    REQUIRE(m.ar.size() == 1);
    const double phi_hat = m.ar[0];
    CHECK_THAT(m.loglik, WithinAbs(concentrated_closed_form(kAr1Series, phi_hat), 1e-6));

    double best_phi = 0;
    double best_ll = -std::numeric_limits<double>::infinity();
    for (int i = -9999; i <= 9999; ++i) {
        const double phi = i * 1e-4;
        const double ll = concentrated_closed_form(kAr1Series, phi);
        if (ll > best_ll) {
            best_ll = ll;
            best_phi = phi;
        }
    }
    CHECK_THAT(phi_hat, WithinAbs(best_phi, 2e-4));
    CHECK(m.loglik >= best_ll - 1e-8);
}

TEST_CASE("fixture ARIMA(3,1,0) matches the published fit", "[estimation]") {
    const auto& m = testing::ipr_model();
    REQUIRE(m.ar.size() == 3);
    REQUIRE(m.std_errors.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK_THAT(m.ar[i], WithinAbs(pub::kAr[i], 0.02));
        CHECK_THAT(m.std_errors[i], WithinAbs(pub::kArSe[i], 0.01));
    }
    CHECK_THAT(m.sigma2, WithinRel(pub::kSigma2, 0.03));
    CHECK_THAT(m.loglik, WithinAbs(pub::kLoglik, 0.5));
    CHECK_THAT(m.aic, WithinAbs(pub::kAic, 1.0));
    CHECK_THAT(m.aicc, WithinAbs(pub::kAicc, 1.0));
    CHECK_THAT(m.bic, WithinAbs(pub::kBic, 1.0));
    CHECK(m.n_effective == 38);
    CHECK(m.parameter_count() == 4);
    CHECK(m.residuals.size() == 39);
    CHECK_FALSE(m.drift.has_value());
    CHECK(m.coefficient_names() == std::vector<std::string>{"ar1", "ar2", "ar3"});
}

TEST_CASE("fixture residual lag-one autocorrelation", "[estimation]") {
    const auto& res = testing::ipr_model().residuals;
    CHECK_THAT(acf(res, 1)[1].value, WithinAbs(pub::kAccuracy.acf1, 0.01));
}

TEST_CASE("information criteria", "[estimation]") {
    SECTION("published triple") {
        const auto ic = information_criteria(203.25, 4, 38);
        CHECK_THAT(ic.aic, WithinAbs(-398.5, 0.01));
        CHECK_THAT(ic.aicc, WithinAbs(-397.29, 0.01));
        CHECK_THAT(ic.bic, WithinAbs(-391.95, 0.01));
    }
    SECTION("zero") {
        const auto ic = information_criteria(0, 0, 10);
        CHECK(ic.aic == 0);
        CHECK(ic.aicc == 0);
        CHECK(ic.bic == 0);
    }
    SECTION("penalty arithmetic") {
        const auto a = information_criteria(10, 1, 38);
        const auto b = information_criteria(10, 2, 38);
        CHECK_THAT(b.aic - a.aic, WithinAbs(2.0, 1e-12));
        CHECK_THAT(b.bic - a.bic, WithinAbs(std::log(38.0), 1e-12));
    }
    SECTION("undefined AICc") {
        CHECK_THROWS_AS(information_criteria(1, 4, 5), UndefinedCriterion);
    }
    SECTION("identities hold for fitted models") {
        for (const auto& m : {testing::ipr_model(), fit(testing::ipr_series(), arima(2, 1, 0, true))}) {
            const double k = m.parameter_count();
            const double n = m.n_effective;
            CHECK_THAT(m.aic, WithinAbs(-2 * m.loglik + 2 * k, 1e-6));
            CHECK_THAT(m.aicc, WithinAbs(m.aic + 2 * k * (k + 1) / (n - k - 1), 1e-6));
            CHECK_THAT(m.bic, WithinAbs(m.aic + k * (std::log(n) - 2), 1e-6));
        }
    }
}

TEST_CASE("white-noise model without mean", "[estimation]") {
    const auto y = testing::white_noise(30, 12, 2.0);
    const auto m = fit(TimeSeries(y), arima(0, 0, 0));
    CHECK(m.coefficients().empty());
    CHECK(m.std_errors.empty());
    const double ms = std::inner_product(y.begin(), y.end(), y.begin(), 0.0) / static_cast<double>(y.size());
    CHECK_THAT(m.sigma2, WithinRel(ms, 1e-12));
    REQUIRE(m.residuals.size() == y.size());
    for (std::size_t i = 0; i < y.size(); ++i) CHECK_THAT(m.residuals[i], WithinAbs(y[i], 1e-12));
}

TEST_CASE("mean model likelihood equals the normal density at the sample moments", "[estimation]") {
    auto y = testing::white_noise(40, 3, 0.5);
    for (auto& v : y) v += 7.0;
    const auto m = fit(TimeSeries(y), arima(0, 0, 0, true));
    const double mu = std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(y.size());
    double ss = 0;
    for (double v : y) ss += (v - mu) * (v - mu);
    const double var = ss / static_cast<double>(y.size());
    double expected = 0;
    for (double v : y) expected += testing::normal_log_density(v, mu, var);
    REQUIRE(m.drift.has_value());
    CHECK_THAT(*m.drift, WithinAbs(mu, 1e-9));
    CHECK_THAT(m.loglik, WithinAbs(expected, 1e-8));
    CHECK(m.coefficient_names() == std::vector<std::string>{"mean"});
}

TEST_CASE("drift model residuals have zero mean", "[estimation]") {
    const auto rw = testing::random_walk(60, 14);
    std::vector<double> y(rw);
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += 0.3 * static_cast<double>(i);
    const auto m = fit(TimeSeries(y), arima(0, 1, 0, true));
    const auto res = m.effective_residuals();
    const double scale = std::sqrt(m.sigma2);
    const double mean = std::accumulate(res.begin(), res.end(), 0.0) / static_cast<double>(res.size());
    CHECK(std::abs(mean) <= 1e-8 * scale);
    CHECK(m.coefficient_names() == std::vector<std::string>{"drift"});
}

TEST_CASE("fit rejects unusable inputs", "[estimation]") {
    SECTION("too short") {
        CHECK_THROWS_AS(fit(TimeSeries({1, 2, 3, 4}), arima(3, 1, 0)), InvalidArgument);
    }
    SECTION("bad orders") {
        CHECK_THROWS_AS(fit(testing::ipr_series(), arima(-1, 0, 0)), InvalidArgument);
        CHECK_THROWS_AS(fit(testing::ipr_series(), arima(1, 2, 0, true)), InvalidArgument);
    }
    SECTION("a deterministic trend has no stationary AR(1) fit") {
        std::vector<double> y(50);
        std::iota(y.begin(), y.end(), 1.0);
        CHECK_THROWS_AS(fit(TimeSeries(y), arima(1, 0, 0)), FitFailed);
    }
}

TEST_CASE("model order text", "[estimation]") {
    CHECK(arima(3, 1, 0).to_string() == "ARIMA(3,1,0)");
    CHECK(arima(0, 1, 0, true).to_string() == "ARIMA(0,1,0) with drift");
    CHECK(arima(1, 0, 0, true).to_string() == "ARIMA(1,0,0) with non-zero mean");
    ModelOrder o = arima(1, 1, 0, true);
    o.P = 1;
    o.s = 4;
    CHECK(o.to_string() == "ARIMA(1,1,0)(1,0,0)[4] with drift");
}

TEST_CASE("polynomial helpers", "[estimation]") {
    SECTION("differencing operator") {
        CHECK(poly::differencing(1, 0, 1) == std::vector<double>{1, -1});
        CHECK(poly::differencing(1, 1, 4) == std::vector<double>{1, -1, 0, 0, -1, 1});
    }
    SECTION("seasonal expansion") {
        const std::vector<double> ar{0.5};
        const std::vector<double> sar{0.3};
        const auto phi = poly::expand_ar(ar, sar, 4);
        REQUIRE(phi.size() == 5);
        CHECK_THAT(phi[0], WithinAbs(0.5, 1e-15));
        CHECK_THAT(phi[3], WithinAbs(0.3, 1e-15));
        CHECK_THAT(phi[4], WithinAbs(-0.15, 1e-15));
    }
    SECTION("root modulus") {
        // 1 - 0.5 z has its root at 2.
        CHECK_THAT(poly::min_root_modulus(std::vector<double>{1, -0.5}), WithinAbs(2.0, 1e-12));
        // (1 - 0.5 z)(1 + 0.8 z) = 1 + 0.3 z - 0.4 z^2
        CHECK_THAT(poly::min_root_modulus(std::vector<double>{1, 0.3, -0.4}), WithinAbs(1.25, 1e-12));
    }
    SECTION("unconstrained transform round trip") {
        const std::vector<double> u{0.3, -1.2, 0.7};
        const auto ar = poly::unconstrained_to_ar(u);
        CHECK(poly::min_root_modulus(poly::from_ar(ar)) > 1.0);
        const auto back = poly::ar_to_unconstrained(ar);
        for (std::size_t i = 0; i < u.size(); ++i) CHECK_THAT(back[i], WithinAbs(u[i], 1e-10));
    }
}

TEST_CASE("stationary state covariance", "[estimation]") {
    const std::vector<double> phi{0.6};
    const std::vector<double> theta{};
    const auto ss = make_arma_state_space(phi, theta);
    CHECK_THAT(ss.initial_covariance(0, 0), WithinAbs(1.0 / (1.0 - 0.36), 1e-12));
    const std::vector<double> bad{1.1};
    CHECK_THROWS_AS(make_arma_state_space(bad, theta), ComputeError);
}

TEST_CASE("simulation", "[estimation]") {
    SECTION("white-noise variance") {
        const auto x = simulate(arima(0, 0, 0), {}, 1.0, 10000, 42);
        const double m = std::accumulate(x.vector().begin(), x.vector().end(), 0.0) / 10000.0;
        double v = 0;
        for (double e : x.values()) v += (e - m) * (e - m);
        CHECK_THAT(v / 9999.0, WithinRel(1.0, 0.10));
    }
    SECTION("AR(1) autocorrelation") {
        const std::vector<double> c{0.8};
        const auto x = simulate(arima(1, 0, 0), c, 1.0, 50000, 7);
        CHECK_THAT(acf(x, 1)[1].value, WithinAbs(0.8, 0.02));
    }
    SECTION("determinism") {
        const std::vector<double> c{0.4, -0.3};
        const auto a = simulate(arima(1, 1, 1), c, 2.0, 300, 99);
        const auto b = simulate(arima(1, 1, 1), c, 2.0, 300, 99);
        CHECK(a.vector() == b.vector());
        const auto other = simulate(arima(1, 1, 1), c, 2.0, 300, 100);
        CHECK(a.vector() != other.vector());
    }
    SECTION("invalid coefficients") {
        const std::vector<double> c{1.2};
        CHECK_THROWS_AS(simulate(arima(1, 0, 0), c, 1.0, 100, 1), InvalidArgument);
        CHECK_THROWS_AS(simulate(arima(0, 0, 1), c, 1.0, 100, 1), InvalidArgument);
    }
}

TEST_CASE("parameter recovery on simulated data", "[estimation][recovery]") {
    struct Case {
        ModelOrder order;
        std::vector<double> coefficients;
    };
    ModelOrder seasonal = arima(1, 0, 0);
    seasonal.P = 1;
    seasonal.s = 4;
    const std::vector<Case> cases{
        {arima(1, 0, 0), {0.6}},
        {arima(0, 0, 1), {0.5}},
        {arima(1, 0, 1), {0.5, 0.3}},
        {arima(2, 1, 0), {0.5, -0.3}},
        {seasonal, {0.5, 0.4}},
    };
    const auto start = std::chrono::steady_clock::now();
    for (const auto& c : cases) {
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            const auto y = simulate(c.order, c.coefficients, 1.0, 5000, seed);
            const auto m = fit(y, c.order);
            const auto est = m.coefficients();
            REQUIRE(est.size() == c.coefficients.size());
            for (std::size_t i = 0; i < est.size(); ++i) {
                INFO(c.order.to_string() << " seed " << seed << " coefficient " << i);
                CHECK(std::abs(est[i] - c.coefficients[i]) <= 3.0 * m.std_errors[i]);
            }
        }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CHECK(secs < 20.0);
}
