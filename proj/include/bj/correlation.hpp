#pragma once

#include "bj/series.hpp"

#include <span>
#include <vector>

namespace bj {

struct CorrelogramRow {
    int lag = 0;
    double value = 0;
};

/// Sample autocorrelations for lags 0..max_lag using the full-sample
/// (biased) denominator. Throws DegenerateSeries for a constant input.
[[nodiscard]] std::vector<CorrelogramRow> acf(std::span<const double> x, int max_lag);
[[nodiscard]] inline std::vector<CorrelogramRow> acf(const TimeSeries& ts, int max_lag) {
    return acf(ts.values(), max_lag);
}

/// Sample partial autocorrelations for lags 1..max_lag (Durbin-Levinson on the ACF).
[[nodiscard]] std::vector<CorrelogramRow> pacf(std::span<const double> x, int max_lag);
[[nodiscard]] inline std::vector<CorrelogramRow> pacf(const TimeSeries& ts, int max_lag) {
    return pacf(ts.values(), max_lag);
}

/// Plain autocorrelation values r_0..r_max_lag.
[[nodiscard]] std::vector<double> autocorrelations(std::span<const double> x, int max_lag);

/// Partial autocorrelations from autocorrelations r_0..r_K; returns K values
/// (lags 1..K).
[[nodiscard]] std::vector<double> durbin_levinson(std::span<const double> rho);

/// Half-width z_{(1+level)/2} / sqrt(n) of the white-noise band drawn on correlograms.
[[nodiscard]] double significance_bound(int n, double level = 0.95);

/// Inverse standard normal CDF (Wichura's AS241, relative accuracy ~1e-16).
[[nodiscard]] double normal_quantile(double p);

[[nodiscard]] double normal_cdf(double x);

}  // namespace bj
