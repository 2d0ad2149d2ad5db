#include "catch_amalgamated.hpp"

#include "fixture.hpp"
#include "oracles.hpp"

#include <bj/diagnostics.hpp>
#include <bj/selection.hpp>
#include <bj/stationarity.hpp>

#include <numeric>

using namespace bj;

// Fixed-seed Monte-Carlo checks of test size and power.

TEST_CASE("ADF keeps its size on random walks", "[calibration]") {
    int kept = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        if (adf_test(testing::random_walk(200, seed)).p_value > 0.10) ++kept;
    }
    INFO(kept << " of 100 random walks not rejected at 10%");
    CHECK(kept >= 95);
}

TEST_CASE("Phillips-Perron rejects a unit root for white noise", "[calibration]") {
    int rejected = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        if (pp_test(testing::white_noise(100, 1000 + seed)).p_value <= 0.05) ++rejected;
    }
    INFO(rejected << " of 100 white-noise series rejected at 5%");
    CHECK(rejected >= 95);
}

TEST_CASE("KPSS keeps its size on demeaned white noise", "[calibration]") {
    int kept = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        auto x = testing::white_noise(200, 2000 + seed);
        const double m = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
        for (auto& v : x) v -= m;
        const auto r = kpss_test(x);
        if (r.clamped == Clamp::at_upper && r.p_value == 0.10) ++kept;
    }
    INFO(kept << " of 100 stationary series clamped at p = 0.10");
    CHECK(kept >= 90);
}

TEST_CASE("Ljung-Box p-values are uniform under white noise", "[calibration]") {
    std::vector<double> p;
    for (std::uint64_t seed = 1; seed <= 500; ++seed) {
        const auto x = testing::white_noise(200, 3000 + seed);
        p.push_back(ljung_box(x, default_ljung_box_lags(x.size())).p_value);
    }
    const double d = testing::uniform_ks_distance(p);
    INFO("Kolmogorov distance " << d);
    CHECK(d < 0.1);
}

TEST_CASE("order search prefers white noise under the null", "[calibration][parsimony]") {
    SearchConfig c;
    c.parallel = true;
    int white = 0;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        const auto r = auto_select(TimeSeries(testing::white_noise(300, 4000 + seed)), c);
        if (r.model.order.arma_count() == 0 && r.model.order.d == 0) ++white;
    }
    INFO(white << " of 50 searches chose ARIMA(0,0,0)");
    CHECK(white >= 40);
}

TEST_CASE("BIC order search prefers white noise under the null", "[calibration]") {
    SearchConfig c;
    c.parallel = true;
    c.criterion = Criterion::bic;
    int white = 0;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        const auto r = auto_select(TimeSeries(testing::white_noise(300, 4000 + seed)), c);
        if (r.model.order.arma_count() == 0 && r.model.order.d == 0) ++white;
    }
    INFO(white << " of 50 BIC searches chose ARIMA(0,0,0)");
    CHECK(white >= 40);
}
