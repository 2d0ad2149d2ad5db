#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace bj {

/// Calendar position of an observation: a year and a 1-based period within it.
struct Period {
    int year = 1;
    int period = 1;

    friend bool operator==(const Period&, const Period&) = default;
};

/// Ordered, complete, finite observations with calendar metadata.
///
/// The calendar (start, frequency) is presentation only; every computation in
/// the toolkit works on the value sequence.
class TimeSeries {
public:
    TimeSeries() = default;
    explicit TimeSeries(std::vector<double> values, Period start = {}, int frequency = 1);

    [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
    [[nodiscard]] const std::vector<double>& vector() const noexcept { return values_; }
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] bool empty() const noexcept { return values_.empty(); }
    [[nodiscard]] double operator[](std::size_t i) const { return values_[i]; }
    [[nodiscard]] double front() const { return values_.front(); }
    [[nodiscard]] double back() const { return values_.back(); }

    [[nodiscard]] Period start() const noexcept { return start_; }
    [[nodiscard]] int frequency() const noexcept { return frequency_; }

    /// Calendar position of index i; i may run past the end (forecast horizon)
    /// or be negative.
    [[nodiscard]] Period period_at(std::ptrdiff_t i) const;
    [[nodiscard]] Period end() const { return period_at(static_cast<std::ptrdiff_t>(size()) - 1); }

    /// "2022 Q4" for quarterly data, "2022 M03" for monthly, "2022" for annual.
    [[nodiscard]] std::string label_at(std::ptrdiff_t i) const;

    /// Same calendar, new values starting `offset` periods after this series' start.
    [[nodiscard]] TimeSeries shifted(std::vector<double> values, std::ptrdiff_t offset) const;

private:
    std::vector<double> values_;
    Period start_{};
    int frequency_ = 1;
};

[[nodiscard]] std::string format_period(Period p, int frequency);

/// Advances a calendar position by `steps` periods (may be negative).
[[nodiscard]] Period advance(Period p, int frequency, std::ptrdiff_t steps);

struct SummaryStats {
    double min = 0;
    double q1 = 0;
    double median = 0;
    double mean = 0;
    double q3 = 0;
    double max = 0;
};

/// Applies (1 - B^lag)^times. The result starts lag*times periods later.
[[nodiscard]] TimeSeries difference(const TimeSeries& ts, int lag = 1, int times = 1);
[[nodiscard]] std::vector<double> difference(std::span<const double> x, int lag = 1, int times = 1);

/// Inverts one lag-`lag` difference given the first `lag` values of the
/// undifferenced series. The result starts `lag` periods before `diffed`.
[[nodiscard]] TimeSeries integrate(const TimeSeries& diffed, std::span<const double> seed_values, int lag = 1);

/// Sample quantile by linear interpolation at h = (n-1)p between order statistics.
[[nodiscard]] double quantile(std::span<const double> x, double p);

[[nodiscard]] SummaryStats summary(const TimeSeries& ts);

[[nodiscard]] double mean(std::span<const double> x);

}  // namespace bj
