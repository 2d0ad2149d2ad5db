#pragma once

#include "bj/model.hpp"
#include "bj/series.hpp"

#include <span>
#include <string>
#include <vector>

namespace bj {

struct ForecastBand {
    /// Coverage in (0, 1).
    double level = 0.95;
    std::vector<double> lower;
    std::vector<double> upper;
};

struct ForecastResult {
    /// Index of the last observation in the fitted series.
    std::ptrdiff_t origin = 0;
    int horizon = 0;
    std::vector<double> points;
    std::vector<double> std_errors;
    /// Sorted by level.
    std::vector<ForecastBand> bands;
    /// Calendar labels of the forecast periods ("2022 Q4", ...).
    std::vector<std::string> labels;

    /// Throws InvalidArgument when the level was not requested.
    [[nodiscard]] const ForecastBand& band(double level) const;
};

/// First `count` weights of the infinite moving-average form of the model,
/// differencing included; psi_0 = 1.
[[nodiscard]] std::vector<double> psi_weights(const FittedModel& model, int count);

/// Point forecasts on the original scale with normal-theory bands at each level.
[[nodiscard]] ForecastResult forecast(const FittedModel& model, int h, std::span<const double> levels = {});

}  // namespace bj
