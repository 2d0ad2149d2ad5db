#include "bj/stationarity.hpp"

#include "bj/error.hpp"
#include "ols.hpp"

#include <array>
#include <cmath>

#include <fmt/format.h>

namespace bj {

namespace {

// Linear interpolation in a monotone table with flat extrapolation.
double interpolate(std::span<const double> xs, std::span<const double> ys, double x) {
    const bool increasing = xs.front() < xs.back();
    const auto n = xs.size();
    if (increasing ? x <= xs.front() : x >= xs.front()) {
        return ys.front();
    }
    if (increasing ? x >= xs[n - 1] : x <= xs[n - 1]) {
        return ys[n - 1];
    }
    for (std::size_t i = 1; i < n; ++i) {
        const bool inside = increasing ? x <= xs[i] : x >= xs[i];
        if (inside) {
            const double w = (x - xs[i - 1]) / (xs[i] - xs[i - 1]);
            return ys[i - 1] + w * (ys[i] - ys[i - 1]);
        }
    }
    return ys[n - 1];
}

constexpr std::array<double, 6> kSampleSizes{25, 50, 100, 250, 500, 1e5};
constexpr std::array<double, 8> kUnitRootProbs{0.01, 0.025, 0.05, 0.10, 0.90, 0.95, 0.975, 0.99};
using CriticalTable = std::array<std::array<double, 6>, 8>;

// Dickey-Fuller t-statistic with constant and trend, by sample size.
// Banerjee, Dolado, Galbraith and Hendry (1993), Table 4.2.
constexpr CriticalTable kAdfTrend{{
    {-4.38, -4.15, -4.04, -3.99, -3.98, -3.96},
    {-3.95, -3.80, -3.73, -3.69, -3.68, -3.66},
    {-3.60, -3.50, -3.45, -3.43, -3.42, -3.41},
    {-3.24, -3.18, -3.15, -3.13, -3.13, -3.12},
    {-1.14, -1.19, -1.22, -1.23, -1.24, -1.25},
    {-0.80, -0.87, -0.90, -0.92, -0.93, -0.94},
    {-0.50, -0.58, -0.62, -0.64, -0.65, -0.66},
    {-0.15, -0.24, -0.28, -0.31, -0.32, -0.33},
}};

// Normalised-bias n(alpha - 1) with constant and trend.
// Fuller (1996), Table 10.A.1.
constexpr CriticalTable kPpAlphaTrend{{
    {-22.5, -25.7, -27.4, -28.4, -28.9, -29.5},
    {-19.9, -22.4, -23.6, -24.4, -24.8, -25.1},
    {-17.9, -19.8, -20.7, -21.3, -21.5, -21.8},
    {-15.6, -16.8, -17.5, -18.0, -18.1, -18.3},
    {-3.66, -3.71, -3.74, -3.75, -3.76, -3.77},
    {-2.51, -2.60, -2.62, -2.64, -2.65, -2.66},
    {-1.53, -1.66, -1.73, -1.78, -1.78, -1.79},
    {-0.43, -0.65, -0.75, -0.82, -0.84, -0.87},
}};

// Kwiatkowski, Phillips, Schmidt and Shin (1992), Table 1 (asymptotic).
constexpr std::array<double, 4> kKpssProbs{0.01, 0.025, 0.05, 0.10};
constexpr std::array<double, 4> kKpssLevel{0.739, 0.574, 0.463, 0.347};
constexpr std::array<double, 4> kKpssTrend{0.216, 0.176, 0.146, 0.119};

struct PValue {
    double p;
    Clamp clamped;
};

// Critical values interpolated to sample size n, then p interpolated in the
// statistic. Small statistics reject the unit-root null.
PValue unit_root_p_value(const CriticalTable& table, double n, double stat) {
    std::array<double, 8> crit{};
    for (std::size_t i = 0; i < table.size(); ++i) {
        crit[i] = interpolate(kSampleSizes, table[i], n);
    }
    if (stat < crit.front()) {
        return {kUnitRootProbs.front(), Clamp::at_lower};
    }
    if (stat > crit.back()) {
        return {kUnitRootProbs.back(), Clamp::at_upper};
    }
    return {interpolate(crit, kUnitRootProbs, stat), Clamp::none};
}

}  // namespace

std::string_view to_string(TestKind k) {
    switch (k) {
        case TestKind::adf:
            return "ADF";
        case TestKind::pp:
            return "PP";
        case TestKind::kpss:
            return "KPSS";
    }
    return "?";
}

std::string_view to_string(NullHypothesis h) {
    return h == NullHypothesis::unit_root ? "unit_root" : "stationary";
}

std::string_view to_string(Clamp c) {
    switch (c) {
        case Clamp::none:
            return "none";
        case Clamp::at_lower:
            return "at_lower";
        case Clamp::at_upper:
            return "at_upper";
    }
    return "?";
}

int default_adf_lag(std::size_t n) {
    return n < 2 ? 0 : static_cast<int>(std::trunc(std::cbrt(static_cast<double>(n) - 1.0)));
}

int short_truncation_lag(std::size_t n) {
    return static_cast<int>(std::trunc(4.0 * std::pow(static_cast<double>(n) / 100.0, 0.25)));
}

double bartlett_long_run_variance(std::span<const double> u, int lag) {
    const auto n = u.size();
    double s = 0;
    for (double v : u) {
        s += v * v;
    }
    double acc = 0;
    for (int j = 1; j <= lag; ++j) {
        double g = 0;
        for (std::size_t t = static_cast<std::size_t>(j); t < n; ++t) {
            g += u[t] * u[t - static_cast<std::size_t>(j)];
        }
        acc += (1.0 - static_cast<double>(j) / (lag + 1.0)) * g;
    }
    return (s + 2.0 * acc) / static_cast<double>(n);
}

TestReport adf_test(std::span<const double> x, std::optional<int> lag_order) {
    const int k = lag_order.value_or(default_adf_lag(x.size()));
    if (k < 0) {
        throw InvalidArgument("adf_test: lag order must be non-negative");
    }
    if (x.size() <= static_cast<std::size_t>(k) + 2) {
        throw InvalidArgument(fmt::format("adf_test: series of length {} too short for lag {}", x.size(), k));
    }
    const auto dx = difference(x, 1, 1);
    const auto n = static_cast<Eigen::Index>(dx.size());
    // Rows t = k..n-1 of the differenced series.
    const Eigen::Index rows = n - k;
    Eigen::MatrixXd X(rows, 3 + k);
    Eigen::VectorXd y(rows);
    for (Eigen::Index r = 0; r < rows; ++r) {
        const Eigen::Index t = r + k;
        y(r) = dx[static_cast<std::size_t>(t)];
        X(r, 0) = 1.0;
        X(r, 1) = x[static_cast<std::size_t>(t)];
        X(r, 2) = static_cast<double>(t + 1);
        for (int j = 1; j <= k; ++j) {
            X(r, 2 + j) = dx[static_cast<std::size_t>(t - j)];
        }
    }
    const auto fit = detail::ols(X, y);
    TestReport rep;
    rep.kind = TestKind::adf;
    rep.statistic = fit.coef(1) / fit.std_errors(1);
    rep.lag = k;
    rep.null_hypothesis = NullHypothesis::unit_root;
    const auto pv = unit_root_p_value(kAdfTrend, static_cast<double>(n), rep.statistic);
    rep.p_value = pv.p;
    rep.clamped = pv.clamped;
    return rep;
}

PhillipsPerronDetail pp_statistics(std::span<const double> x) {
    if (x.size() < 10) {
        throw InvalidArgument("pp_test: need at least 10 observations");
    }
    const auto n = static_cast<Eigen::Index>(x.size() - 1);
    const double nd = static_cast<double>(n);
    Eigen::MatrixXd X(n, 3);
    Eigen::VectorXd y(n);
    double sum_lag = 0, sum_lag_sq = 0, sum_lag_t = 0;
    for (Eigen::Index t = 0; t < n; ++t) {
        const double lagged = x[static_cast<std::size_t>(t)];
        y(t) = x[static_cast<std::size_t>(t) + 1];
        X(t, 0) = 1.0;
        X(t, 1) = static_cast<double>(t + 1) - nd / 2.0;
        X(t, 2) = lagged;
        sum_lag += lagged;
        sum_lag_sq += lagged * lagged;
        sum_lag_t += lagged * static_cast<double>(t + 1);
    }
    const auto fit = detail::ols(X, y);
    const std::span<const double> u(fit.residuals.data(), static_cast<std::size_t>(n));

    PhillipsPerronDetail d;
    d.n = static_cast<std::size_t>(n);
    d.lag = short_truncation_lag(d.n);
    d.short_run_variance = bartlett_long_run_variance(u, 0);
    d.long_run_variance = bartlett_long_run_variance(u, d.lag);

    const double n2 = nd * nd;
    // Determinant of the moment matrix of (1, t, y_{t-1}), times n^2.
    const double dx = n2 * (n2 - 1.0) * sum_lag_sq / 12.0 - nd * sum_lag_t * sum_lag_t +
                      nd * (nd + 1.0) * sum_lag_t * sum_lag -
                      nd * (nd + 1.0) * (2.0 * nd + 1.0) * sum_lag * sum_lag / 6.0;
    const double alpha = fit.coef(2);
    const double correction = d.long_run_variance - d.short_run_variance;
    d.normalized_bias = nd * (alpha - 1.0);
    d.z_alpha = d.normalized_bias - std::pow(nd, 6) / (24.0 * dx) * correction;

    const double t_alpha = (alpha - 1.0) / fit.std_errors(2);
    const double lrv_sd = std::sqrt(d.long_run_variance);
    d.z_tau = std::sqrt(d.short_run_variance) / lrv_sd * t_alpha -
              correction * std::pow(nd, 3) / (4.0 * std::sqrt(3.0) * std::sqrt(dx) * lrv_sd);
    return d;
}

TestReport pp_test(std::span<const double> x) {
    const auto d = pp_statistics(x);
    TestReport rep;
    rep.kind = TestKind::pp;
    rep.statistic = d.z_alpha;
    rep.lag = d.lag;
    rep.null_hypothesis = NullHypothesis::unit_root;
    const auto pv = unit_root_p_value(kPpAlphaTrend, static_cast<double>(d.n), d.z_alpha);
    rep.p_value = pv.p;
    rep.clamped = pv.clamped;
    return rep;
}

TestReport kpss_test(std::span<const double> x, KpssNull null) {
    if (x.size() < 10) {
        throw InvalidArgument("kpss_test: need at least 10 observations");
    }
    const auto n = static_cast<Eigen::Index>(x.size());
    Eigen::MatrixXd X(n, null == KpssNull::level ? 1 : 2);
    Eigen::VectorXd y(n);
    for (Eigen::Index t = 0; t < n; ++t) {
        y(t) = x[static_cast<std::size_t>(t)];
        X(t, 0) = 1.0;
        if (null == KpssNull::trend) {
            X(t, 1) = static_cast<double>(t + 1);
        }
    }
    const auto fit = detail::ols(X, y);
    const std::span<const double> e(fit.residuals.data(), static_cast<std::size_t>(n));

    double partial = 0, eta = 0;
    for (double v : e) {
        partial += v;
        eta += partial * partial;
    }
    const double nd = static_cast<double>(n);
    eta /= nd * nd;

    TestReport rep;
    rep.kind = TestKind::kpss;
    rep.lag = short_truncation_lag(static_cast<std::size_t>(n));
    rep.null_hypothesis = NullHypothesis::stationary;
    const double lrv = bartlett_long_run_variance(e, rep.lag);
    if (!(lrv > 0.0)) {
        throw DegenerateSeries("kpss_test: residual long-run variance is not positive");
    }
    rep.statistic = eta / lrv;

    const auto& crit = null == KpssNull::level ? kKpssLevel : kKpssTrend;
    if (rep.statistic > crit.front()) {
        rep.p_value = kKpssProbs.front();
        rep.clamped = Clamp::at_lower;
    } else if (rep.statistic < crit.back()) {
        rep.p_value = kKpssProbs.back();
        rep.clamped = Clamp::at_upper;
    } else {
        rep.p_value = interpolate(crit, kKpssProbs, rep.statistic);
    }
    return rep;
}

}  // namespace bj
