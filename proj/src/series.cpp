#include "bj/series.hpp"

#include "bj/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

namespace bj {

TimeSeries::TimeSeries(std::vector<double> values, Period start, int frequency)
    : values_(std::move(values)), start_(start), frequency_(frequency) {
    if (values_.empty()) {
        throw InvalidArgument("time series must contain at least one observation");
    }
    if (frequency_ < 1) {
        throw InvalidArgument(fmt::format("frequency must be >= 1 (got {})", frequency_));
    }
    if (start_.period < 1 || start_.period > frequency_) {
        throw InvalidArgument(
            fmt::format("start period {} outside 1..{}", start_.period, frequency_));
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i])) {
            throw InvalidArgument(fmt::format("non-finite value at index {}", i));
        }
    }
}

Period advance(Period p, int frequency, std::ptrdiff_t steps) {
    const std::ptrdiff_t linear =
        static_cast<std::ptrdiff_t>(p.year) * frequency + (p.period - 1) + steps;
    std::ptrdiff_t year = linear / frequency;
    std::ptrdiff_t rem = linear % frequency;
    if (rem < 0) {
        rem += frequency;
        --year;
    }
    return {static_cast<int>(year), static_cast<int>(rem) + 1};
}

Period TimeSeries::period_at(std::ptrdiff_t i) const { return advance(start_, frequency_, i); }

std::string format_period(Period p, int frequency) {
    switch (frequency) {
        case 1:
            return fmt::format("{}", p.year);
        case 4:
            return fmt::format("{} Q{}", p.year, p.period);
        case 12:
            return fmt::format("{} M{:02}", p.year, p.period);
        default:
            return fmt::format("{} p{}", p.year, p.period);
    }
}

std::string TimeSeries::label_at(std::ptrdiff_t i) const {
    return format_period(period_at(i), frequency_);
}

TimeSeries TimeSeries::shifted(std::vector<double> values, std::ptrdiff_t offset) const {
    return TimeSeries(std::move(values), period_at(offset), frequency_);
}

std::vector<double> difference(std::span<const double> x, int lag, int times) {
    if (lag < 1 || times < 1) {
        throw InvalidArgument("difference: lag and times must be >= 1");
    }
    const auto span = static_cast<std::size_t>(lag) * static_cast<std::size_t>(times);
    if (x.size() <= span) {
        throw InvalidArgument(fmt::format(
            "difference: series of length {} too short for lag {} applied {} times", x.size(), lag, times));
    }
    std::vector<double> out(x.begin(), x.end());
    const auto l = static_cast<std::size_t>(lag);
    for (int k = 0; k < times; ++k) {
        for (std::size_t t = out.size() - 1; t >= l; --t) {
            out[t] = out[t] - out[t - l];
        }
        out.erase(out.begin(), out.begin() + lag);
    }
    return out;
}

TimeSeries difference(const TimeSeries& ts, int lag, int times) {
    auto values = difference(ts.values(), lag, times);
    return ts.shifted(std::move(values), static_cast<std::ptrdiff_t>(lag) * times);
}

TimeSeries integrate(const TimeSeries& diffed, std::span<const double> seed_values, int lag) {
    if (lag < 1) {
        throw InvalidArgument("integrate: lag must be >= 1");
    }
    if (seed_values.size() != static_cast<std::size_t>(lag)) {
        throw InvalidArgument(fmt::format(
            "integrate: expected {} seed values for lag {}, got {}", lag, lag, seed_values.size()));
    }
    std::vector<double> out(seed_values.begin(), seed_values.end());
    out.reserve(seed_values.size() + diffed.size());
    const auto l = static_cast<std::size_t>(lag);
    for (std::size_t i = 0; i < diffed.size(); ++i) {
        out.push_back(diffed[i] + out[out.size() - l]);
    }
    return diffed.shifted(std::move(out), -static_cast<std::ptrdiff_t>(lag));
}

double mean(std::span<const double> x) {
    if (x.empty()) {
        throw InvalidArgument("mean of empty sequence");
    }
    return std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
}

namespace {

double sorted_quantile(const std::vector<double>& sorted, double p) {
    const double h = static_cast<double>(sorted.size() - 1) * p;
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const auto hi = std::min(lo + 1, sorted.size() - 1);
    return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

}  // namespace

double quantile(std::span<const double> x, double p) {
    if (x.empty()) {
        throw InvalidArgument("quantile of empty sequence");
    }
    if (!(p >= 0.0 && p <= 1.0)) {
        throw InvalidArgument("quantile probability must lie in [0, 1]");
    }
    std::vector<double> sorted(x.begin(), x.end());
    std::sort(sorted.begin(), sorted.end());
    return sorted_quantile(sorted, p);
}

SummaryStats summary(const TimeSeries& ts) {
    std::vector<double> sorted(ts.values().begin(), ts.values().end());
    std::sort(sorted.begin(), sorted.end());
    SummaryStats s;
    s.min = sorted.front();
    s.max = sorted.back();
    s.q1 = sorted_quantile(sorted, 0.25);
    s.median = sorted_quantile(sorted, 0.5);
    s.q3 = sorted_quantile(sorted, 0.75);
    s.mean = mean(ts.values());
    return s;
}

}  // namespace bj
