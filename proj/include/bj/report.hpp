#pragma once

#include "bj/correlation.hpp"
#include "bj/diagnostics.hpp"
#include "bj/forecast.hpp"
#include "bj/ingest.hpp"
#include "bj/model.hpp"
#include "bj/selection.hpp"
#include "bj/series.hpp"
#include "bj/stationarity.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace bj::report {

using nlohmann::json;

/// 7 significant digits; "NaN", "Inf", "-Inf" for non-finite values.
[[nodiscard]] std::string num(double v);

/// "0.3887", or "<= 0.01 (clamped)" style inequalities for clamped values.
[[nodiscard]] std::string p_value(const TestReport& r);

[[nodiscard]] json to_json(const TimeSeries& ts);
[[nodiscard]] json to_json(const SummaryStats& s);
[[nodiscard]] json to_json(const std::vector<CorrelogramRow>& rows, double bound);
[[nodiscard]] json to_json(const TestReport& r);
[[nodiscard]] json to_json(const ModelOrder& o);
[[nodiscard]] json to_json(const FittedModel& m);
[[nodiscard]] json to_json(const SearchTrace& trace);
[[nodiscard]] json to_json(const PortmanteauReport& r);
[[nodiscard]] json to_json(const NormalityReport& r);
[[nodiscard]] json to_json(const AccuracyReport& r);
[[nodiscard]] json to_json(const ForecastResult& f);

/// Non-finite doubles become null; JSON has no infinities.
[[nodiscard]] json number(double v);

[[nodiscard]] std::string render_series(const TimeSeries& ts, const std::string& title);
[[nodiscard]] std::string render_summary(const SummaryStats& s);
[[nodiscard]] std::string render_correlogram(const std::vector<CorrelogramRow>& rows, const std::string& title,
                                             double bound);
[[nodiscard]] std::string render_test(const TestReport& r, const std::string& data_name,
                                      KpssNull kpss_null = KpssNull::level);
[[nodiscard]] std::string render_fit(const FittedModel& m);
[[nodiscard]] std::string render_trace(const SearchTrace& trace, Criterion c);
[[nodiscard]] std::string render_ljung_box(const PortmanteauReport& r);
[[nodiscard]] std::string render_normality(const NormalityReport& r);
[[nodiscard]] std::string render_accuracy(const AccuracyReport& r);
[[nodiscard]] std::string render_forecast(const ForecastResult& f);

}  // namespace bj::report
