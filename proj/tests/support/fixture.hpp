#pragma once

#include <bj/model.hpp>
#include <bj/series.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace bj::testing {

/// Total penetration rate of the bundled dataset.
[[nodiscard]] const TimeSeries& ipr_series();

/// ARIMA(3,1,0) without drift fitted to ipr_series(); computed once.
[[nodiscard]] const FittedModel& ipr_model();

[[nodiscard]] ModelOrder arima(int p, int d, int q, bool drift = false);

/// Percent columns as printed in the CSV file, read without the library's
/// loader.
struct PrintedRates {
    std::vector<std::string> labels;
    std::vector<double> life;
    std::vector<double> nonlife;
    std::vector<double> total;
};
[[nodiscard]] PrintedRates printed_rates();

[[nodiscard]] std::vector<double> white_noise(std::size_t n, std::uint64_t seed, double sd = 1.0);
[[nodiscard]] std::vector<double> random_walk(std::size_t n, std::uint64_t seed);
[[nodiscard]] std::vector<double> uniform_sample(std::size_t n, std::uint64_t seed);

}  // namespace bj::testing
