#pragma once

#include "bj/series.hpp"

#include <optional>
#include <span>
#include <string_view>

namespace bj {

enum class TestKind { adf, pp, kpss };
enum class NullHypothesis { unit_root, stationary };
enum class KpssNull { level, trend };

/// Which end of the tabulated range, if any, a p-value was pinned to.
enum class Clamp { none, at_lower, at_upper };

struct TestReport {
    TestKind kind = TestKind::adf;
    double statistic = 0;
    /// ADF lag order, or the Bartlett truncation lag for PP and KPSS.
    int lag = 0;
    double p_value = 1;
    Clamp clamped = Clamp::none;
    NullHypothesis null_hypothesis = NullHypothesis::unit_root;

    [[nodiscard]] bool rejects(double alpha) const { return p_value < alpha; }
};

[[nodiscard]] std::string_view to_string(TestKind k);
[[nodiscard]] std::string_view to_string(NullHypothesis h);
[[nodiscard]] std::string_view to_string(Clamp c);

/// trunc((n-1)^(1/3)).
[[nodiscard]] int default_adf_lag(std::size_t n);

/// trunc(4 (n/100)^(1/4)).
[[nodiscard]] int short_truncation_lag(std::size_t n);

/// Bartlett-weighted sum of autocovariances: gamma_0 + 2 sum_{j=1..lag} (1 - j/(lag+1)) gamma_j,
/// every gamma normalised by n (no demeaning).
[[nodiscard]] double bartlett_long_run_variance(std::span<const double> u, int lag);

/// Augmented Dickey-Fuller test with constant and linear trend.
[[nodiscard]] TestReport adf_test(std::span<const double> x, std::optional<int> lag_order = std::nullopt);

/// Phillips-Perron Z(alpha) test with constant and linear trend.
[[nodiscard]] TestReport pp_test(std::span<const double> x);

/// Both Phillips-Perron statistics plus the uncorrected normalised bias.
struct PhillipsPerronDetail {
    double z_alpha = 0;
    double z_tau = 0;
    double normalized_bias = 0;  // n (alpha_hat - 1), before the long-run correction
    double short_run_variance = 0;
    double long_run_variance = 0;
    int lag = 0;
    std::size_t n = 0;
};
[[nodiscard]] PhillipsPerronDetail pp_statistics(std::span<const double> x);

/// KPSS test of level or trend stationarity.
[[nodiscard]] TestReport kpss_test(std::span<const double> x, KpssNull null = KpssNull::level);

}  // namespace bj
