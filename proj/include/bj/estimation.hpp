#pragma once

#include "bj/model.hpp"
#include "bj/series.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace bj {

struct FitOptions {
    int max_iterations = 500;
    double reltol = 1e-8;
    /// Fits with an AR or MA root modulus below this are rejected.
    double root_margin = 1.001;
    int parameter_cap = 10;
};

struct InformationCriteria {
    double aic = 0;
    double aicc = 0;
    double bic = 0;
};

/// aic = -2 loglik + 2k, aicc = aic + 2k(k+1)/(n-k-1), bic = aic + k(ln n - 2).
/// Throws UndefinedCriterion when n <= k + 1.
[[nodiscard]] InformationCriteria information_criteria(double loglik, int k, int n);

/// Applies d regular and D seasonal differences.
[[nodiscard]] std::vector<double> difference_for(std::span<const double> y, const ModelOrder& order);

/// Exact Gaussian log-likelihood of a differenced series.
///
/// `params` holds ar, ma, sar, sma, then the drift/mean if order.drift, then
/// sigma^2 last.
[[nodiscard]] double loglikelihood(std::span<const double> differenced, const ModelOrder& order,
                                   std::span<const double> params);

/// Log-likelihood with sigma^2 replaced by its maximum-likelihood value.
/// `params` as in loglikelihood() without the trailing sigma^2.
[[nodiscard]] double concentrated_loglikelihood(std::span<const double> differenced, const ModelOrder& order,
                                                std::span<const double> params);

/// Maximum-likelihood fit. Throws FitFailed, NearNonstationary, InvalidArgument.
[[nodiscard]] FittedModel fit(const TimeSeries& ts, const ModelOrder& order, const FitOptions& opts = {});

/// Simulates the model with N(0, sigma2) innovations. `coefficients` as in
/// loglikelihood() (without sigma^2). Deterministic for a given seed.
[[nodiscard]] TimeSeries simulate(const ModelOrder& order, std::span<const double> coefficients, double sigma2,
                                  std::size_t n, std::uint64_t seed);

}  // namespace bj
