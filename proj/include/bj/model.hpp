#pragma once

#include "bj/series.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace bj {

/// ARIMA(p,d,q)(P,D,Q)[s] with an optional constant in the differenced series.
struct ModelOrder {
    int p = 0;
    int d = 0;
    int q = 0;
    int P = 0;
    int D = 0;
    int Q = 0;
    int s = 1;
    bool drift = false;

    /// Number of estimated mean-equation coefficients (sigma^2 excluded).
    [[nodiscard]] int coefficient_count() const { return p + q + P + Q + (drift ? 1 : 0); }
    [[nodiscard]] int arma_count() const { return p + q + P + Q; }
    /// Observations consumed by differencing.
    [[nodiscard]] int differencing_span() const { return d + D * s; }
    [[nodiscard]] bool seasonal() const { return P + D + Q > 0; }

    /// Throws InvalidArgument when an invariant is violated.
    void validate(int parameter_cap = 10) const;

    /// "ARIMA(3,1,0)", "ARIMA(1,1,0)(1,0,0)[4] with drift", "ARIMA(1,0,0) with non-zero mean".
    [[nodiscard]] std::string to_string() const;

    friend auto operator<=>(const ModelOrder&, const ModelOrder&) = default;
};

/// A maximum-likelihood ARIMA fit.
struct FittedModel {
    ModelOrder order;
    std::vector<double> ar;
    std::vector<double> ma;
    std::vector<double> sar;
    std::vector<double> sma;
    std::optional<double> drift;
    /// Aligned with coefficient_names(): ar, ma, sar, sma, drift.
    std::vector<double> std_errors;
    /// Innovation variance, SSR / (n_effective - coefficient_count).
    double sigma2 = 0;
    double loglik = 0;
    double aic = 0;
    /// +infinity when n_effective <= k + 1.
    double aicc = 0;
    double bic = 0;
    /// One residual per original observation; the first differencing_span()
    /// entries come from the diffuse-prior start and are near zero.
    TimeSeries residuals;
    int n_effective = 0;
    /// The series the model was fitted to.
    TimeSeries data;

    [[nodiscard]] std::vector<std::string> coefficient_names() const;
    [[nodiscard]] std::vector<double> coefficients() const;
    /// Likelihood parameter count k, sigma^2 included.
    [[nodiscard]] int parameter_count() const { return order.coefficient_count() + 1; }
    /// In-sample one-step fitted values, data - residuals.
    [[nodiscard]] std::vector<double> fitted_values() const;
    /// Residuals after the differencing start-up.
    [[nodiscard]] std::vector<double> effective_residuals() const;
};

}  // namespace bj
