#pragma once

#include "bj/model.hpp"

#include <span>
#include <string>

namespace bj {

struct PortmanteauReport {
    double q_stat = 0;
    int lags_used = 0;
    int fitdf = 0;
    int df = 0;
    double p_value = 1;
};

/// Ljung-Box Q = n(n+2) sum_{k<=lags} r_k^2 / (n-k) against chi-square(lags - fitdf).
/// Throws InvalidArgument when lags <= fitdf or the series is not longer than lags.
[[nodiscard]] PortmanteauReport ljung_box(std::span<const double> residuals, int lags, int fitdf = 0);

/// min(10, round(n/5)) for non-seasonal data, min(2m, round(n/5)) for
/// seasonal period m; never below fitdf + 3.
[[nodiscard]] int default_ljung_box_lags(std::size_t n, int period = 1, int fitdf = 0);

/// Upper-tail probability of a chi-square variate with `df` degrees of freedom.
[[nodiscard]] double chi_square_sf(double x, double df);

struct NormalityReport {
    double d_stat = 0;
    /// Lilliefors p-value, which accounts for the estimated mean and sd.
    double p_value = 1;
    /// Plain asymptotic Kolmogorov p-value. Too large here because the mean and
    /// standard deviation come from the same data.
    double asymptotic_p_value = 1;
    bool estimated_parameters = true;
};
/// One-sample Kolmogorov-Smirnov test against N(mean, sd) of the sample.
[[nodiscard]] NormalityReport ks_normality(std::span<const double> residuals);
/// P-value of the KS statistic `d` for normality with estimated parameters.
[[nodiscard]] double lilliefors_p_value(double d, std::size_t n);
/// Asymptotic Kolmogorov survival function P(K > lambda).
[[nodiscard]] double kolmogorov_sf(double lambda);

struct AccuracyReport {
    double me = 0;
    double rmse = 0;
    double mae = 0;
    /// In percent.
    double mpe = 0;
    double mape = 0;
    double mase = 0;
    /// Lag-one autocorrelation of the errors; NaN when they are constant.
    double acf1 = 0;
};

/// Error measures with error = actual - predicted. MASE divides the MAE by the
/// mean absolute lag-`mase_lag` naive error over `training`.
[[nodiscard]] AccuracyReport accuracy(std::span<const double> actual, std::span<const double> predicted,
                                      std::span<const double> training, int mase_lag = 1);

/// In-sample accuracy of a fitted model; MASE scaled by the seasonal naive
/// error at lag = series frequency.
[[nodiscard]] AccuracyReport training_accuracy(const FittedModel& model);

}  // namespace bj
