#include "bj/report.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

namespace bj::report {

std::string num(double v) {
    if (std::isnan(v)) return "NaN";
    if (std::isinf(v)) return v > 0 ? "Inf" : "-Inf";
    return fmt::format("{:.7g}", v);
}

std::string p_value(const TestReport& r) {
    switch (r.clamped) {
        case Clamp::at_lower: return fmt::format("≤ {} (clamped)", num(r.p_value));
        case Clamp::at_upper: return fmt::format("≥ {} (clamped)", num(r.p_value));
        case Clamp::none: break;
    }
    return num(r.p_value);
}

json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

namespace {

json numbers(std::span<const double> v) {
    json out = json::array();
    for (double x : v) out.push_back(number(x));
    return out;
}

std::string rule(std::size_t width) { return std::string(width, '-') + "\n"; }

}  // namespace

json to_json(const TimeSeries& ts) {
    json labels = json::array();
    for (std::size_t i = 0; i < ts.size(); ++i) labels.push_back(ts.label_at(static_cast<std::ptrdiff_t>(i)));
    return {{"start", {{"year", ts.start().year}, {"period", ts.start().period}}},
            {"frequency", ts.frequency()},
            {"labels", labels},
            {"values", numbers(ts.values())}};
}

json to_json(const SummaryStats& s) {
    return {{"min", s.min}, {"q1", s.q1}, {"median", s.median}, {"mean", s.mean}, {"q3", s.q3}, {"max", s.max}};
}

json to_json(const std::vector<CorrelogramRow>& rows, double bound) {
    json out = json::array();
    for (const auto& r : rows) out.push_back({{"lag", r.lag}, {"value", number(r.value)}});
    return {{"rows", out}, {"bound", number(bound)}};
}

json to_json(const TestReport& r) {
    json clamp = nullptr;
    if (r.clamped == Clamp::at_lower) clamp = "lower";
    if (r.clamped == Clamp::at_upper) clamp = "upper";
    return {{"test", std::string(to_string(r.kind))},
            {"statistic", number(r.statistic)},
            {"lag", r.lag},
            {"p_value", number(r.p_value)},
            {"clamped", clamp},
            {"null_hypothesis", std::string(to_string(r.null_hypothesis))}};
}

json to_json(const ModelOrder& o) {
    return {{"p", o.p}, {"d", o.d}, {"q", o.q}, {"P", o.P},   {"D", o.D},
            {"Q", o.Q}, {"s", o.s}, {"drift", o.drift}, {"label", o.to_string()}};
}

json to_json(const FittedModel& m) {
    json coefs = json::array();
    const auto names = m.coefficient_names();
    const auto values = m.coefficients();
    for (std::size_t i = 0; i < names.size(); ++i) {
        coefs.push_back({{"name", names[i]},
                         {"estimate", number(values[i])},
                         {"std_error", i < m.std_errors.size() ? number(m.std_errors[i]) : json(nullptr)}});
    }
    return {{"order", to_json(m.order)}, {"coefficients", coefs}, {"sigma2", number(m.sigma2)},
            {"loglik", number(m.loglik)},  {"aic", number(m.aic)},    {"aicc", number(m.aicc)},
            {"bic", number(m.bic)},        {"n_effective", m.n_effective}};
}

json to_json(const SearchTrace& trace) {
    json out = json::array();
    for (const auto& e : trace) {
        json row = {{"model", e.order.to_string()},
                    {"order", to_json(e.order)},
                    {"aic", number(e.aic)},
                    {"aicc", number(e.aicc)},
                    {"bic", number(e.bic)},
                    {"failed", !e.finite()}};
        if (!e.failure.empty()) row["failure"] = e.failure;
        out.push_back(row);
    }
    return out;
}

json to_json(const PortmanteauReport& r) {
    return {{"q_stat", number(r.q_stat)}, {"df", r.df},           {"p_value", number(r.p_value)},
            {"fitdf", r.fitdf},           {"lags_used", r.lags_used}};
}

json to_json(const NormalityReport& r) {
    return {{"d_stat", number(r.d_stat)},
            {"p_value", number(r.p_value)},
            {"asymptotic_p_value", number(r.asymptotic_p_value)},
            {"estimated_parameters", r.estimated_parameters}};
}

json to_json(const AccuracyReport& r) {
    return {{"me", number(r.me)},     {"rmse", number(r.rmse)}, {"mae", number(r.mae)}, {"mpe", number(r.mpe)},
            {"mape", number(r.mape)}, {"mase", number(r.mase)}, {"acf1", number(r.acf1)}};
}

json to_json(const ForecastResult& f) {
    json bands = json::array();
    for (const auto& b : f.bands) {
        bands.push_back({{"level", b.level}, {"lower", numbers(b.lower)}, {"upper", numbers(b.upper)}});
    }
    // Row view mirroring the text table: one object per forecast period.
    json rows = json::array();
    for (std::size_t j = 0; j < f.points.size(); ++j) {
        json intervals = json::array();
        for (const auto& b : f.bands) {
            intervals.push_back({{"level", b.level}, {"lower", number(b.lower[j])}, {"upper", number(b.upper[j])}});
        }
        rows.push_back({{"period", f.labels[j]},
                        {"point", number(f.points[j])},
                        {"std_error", number(f.std_errors[j])},
                        {"intervals", intervals}});
    }
    return {{"origin", f.origin},
            {"horizon", f.horizon},
            {"labels", f.labels},
            {"points", numbers(f.points)},
            {"std_errors", numbers(f.std_errors)},
            {"bands", bands},
            {"rows", rows}};
}

std::string render_series(const TimeSeries& ts, const std::string& title) {
    std::string out = title + "\n";
    for (std::size_t i = 0; i < ts.size(); ++i) {
        out += fmt::format("{:<10} {:>14}\n", ts.label_at(static_cast<std::ptrdiff_t>(i)), num(ts[i]));
    }
    return out;
}

std::string render_summary(const SummaryStats& s) {
    std::string out = fmt::format("{:>12} {:>12} {:>12} {:>12} {:>12} {:>12}\n", "Min.", "1st Qu.", "Median",
                                  "Mean", "3rd Qu.", "Max.");
    out += fmt::format("{:>12} {:>12} {:>12} {:>12} {:>12} {:>12}\n", num(s.min), num(s.q1), num(s.median),
                       num(s.mean), num(s.q3), num(s.max));
    return out;
}

std::string render_correlogram(const std::vector<CorrelogramRow>& rows, const std::string& title, double bound) {
    std::string out = title + "\n";
    out += fmt::format("{:>4} {:>12}\n", "lag", "value");
    for (const auto& r : rows) {
        out += fmt::format("{:>4} {:>12}{}\n", r.lag, num(r.value),
                           r.lag > 0 && std::abs(r.value) > bound ? " *" : "");
    }
    out += fmt::format("95% white-noise bound: ±{}\n", num(bound));
    return out;
}

std::string render_test(const TestReport& r, const std::string& data_name, KpssNull kpss_null) {
    std::string title, stat_label, lag_label;
    switch (r.kind) {
        case TestKind::adf:
            title = "Augmented Dickey-Fuller Test";
            stat_label = "Dickey-Fuller";
            lag_label = "Lag order";
            break;
        case TestKind::pp:
            title = "Phillips-Perron Unit Root Test";
            stat_label = "Dickey-Fuller Z(alpha)";
            lag_label = "Truncation lag parameter";
            break;
        case TestKind::kpss:
            title = kpss_null == KpssNull::level ? "KPSS Test for Level Stationarity"
                                                 : "KPSS Test for Trend Stationarity";
            stat_label = kpss_null == KpssNull::level ? "KPSS Level" : "KPSS Trend";
            lag_label = "Truncation lag parameter";
            break;
    }
    std::string out = title + "\n\n";
    out += fmt::format("data: {}\n", data_name);
    out += fmt::format("{} = {}, {} = {}, p-value = {}\n", stat_label, num(r.statistic), lag_label, r.lag,
                       p_value(r));
    out += fmt::format("null hypothesis: {}\n", r.null_hypothesis == NullHypothesis::unit_root ? "unit root" : "stationary");
    return out;
}

std::string render_fit(const FittedModel& m) {
    std::string out = fmt::format("Series fitted: {}\n\nCoefficients:\n", m.order.to_string());
    const auto names = m.coefficient_names();
    const auto values = m.coefficients();
    if (names.empty()) {
        out += "  (none)\n";
    } else {
        out += fmt::format("{:<8} {:>14} {:>14}\n", "", "estimate", "s.e.");
        for (std::size_t i = 0; i < names.size(); ++i) {
            out += fmt::format("{:<8} {:>14} {:>14}\n", names[i], num(values[i]),
                               i < m.std_errors.size() ? num(m.std_errors[i]) : std::string("NA"));
        }
    }
    out += fmt::format("\nsigma^2 = {}   log likelihood = {}\n", num(m.sigma2), num(m.loglik));
    out += fmt::format("AIC = {}   AICc = {}   BIC = {}\n", num(m.aic), num(m.aicc), num(m.bic));
    out += fmt::format("observations after differencing: {}\n", m.n_effective);
    return out;
}

std::string render_trace(const SearchTrace& trace, Criterion c) {
    std::string name = to_string(c);
    std::transform(name.begin(), name.end(), name.begin(), [](unsigned char ch) { return std::toupper(ch); });
    std::size_t width = 5;
    for (const auto& e : trace) width = std::max(width, e.order.to_string().size());
    std::string out = fmt::format("{:<{}}   {}\n", "Model", width, name);
    for (const auto& e : trace) {
        out += fmt::format("{:<{}} : {}\n", e.order.to_string(), width, num(e.value(c)));
    }
    return out;
}

std::string render_ljung_box(const PortmanteauReport& r) {
    return fmt::format("Ljung-Box test\n\nQ* = {}, df = {}, p-value = {}\nModel df: {}.   Total lags used: {}\n",
                       num(r.q_stat), r.df, num(r.p_value), r.fitdf, r.lags_used);
}

std::string render_normality(const NormalityReport& r) {
    std::string out = fmt::format("Kolmogorov-Smirnov normality test (Lilliefors)\n\nD = {}, p-value = {}\n",
                                  num(r.d_stat), num(r.p_value));
    if (r.estimated_parameters) {
        out += fmt::format("asymptotic Kolmogorov p-value = {} (conservative: mean and sd estimated)\n",
                           num(r.asymptotic_p_value));
    }
    return out;
}

std::string render_accuracy(const AccuracyReport& r) {
    std::string out = fmt::format("{:<14} {:>12} {:>12} {:>12} {:>12} {:>12} {:>12} {:>12}\n", "", "ME", "RMSE",
                                  "MAE", "MPE", "MAPE", "MASE", "ACF1");
    out += fmt::format("{:<14} {:>12} {:>12} {:>12} {:>12} {:>12} {:>12} {:>12}\n", "Training set", num(r.me),
                       num(r.rmse), num(r.mae), num(r.mpe), num(r.mape), num(r.mase), num(r.acf1));
    return out;
}

std::string render_forecast(const ForecastResult& f) {
    std::string header = fmt::format("{:<10} {:>14}", "Period", "Point Forecast");
    for (const auto& b : f.bands) {
        const auto pct = num(100.0 * b.level);
        header += fmt::format(" {:>14} {:>14}", "Lo " + pct, "Hi " + pct);
    }
    std::string out = header + "\n" + rule(header.size());
    for (std::size_t j = 0; j < f.points.size(); ++j) {
        out += fmt::format("{:<10} {:>14}", f.labels[j], num(f.points[j]));
        for (const auto& b : f.bands) {
            out += fmt::format(" {:>14} {:>14}", num(b.lower[j]), num(b.upper[j]));
        }
        out += "\n";
    }
    return out;
}

}  // namespace bj::report
