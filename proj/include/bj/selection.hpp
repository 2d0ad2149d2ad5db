#pragma once

#include "bj/estimation.hpp"
#include "bj/model.hpp"
#include "bj/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bj {

enum class Criterion { aic, aicc, bic };

[[nodiscard]] std::string to_string(Criterion c);
/// Parses "aic", "aicc" or "bic" (case-insensitive). Throws InvalidArgument.
[[nodiscard]] Criterion parse_criterion(std::string_view text);

struct SearchConfig {
    Criterion criterion = Criterion::aic;
    int max_p = 5;
    int max_q = 5;
    int max_P = 2;
    int max_Q = 2;
    /// Upper bound on p+q+P+Q for the exhaustive search.
    int max_order = 5;
    int max_d = 2;
    int max_D = 1;
    /// Use the series frequency as the seasonal period when it exceeds one.
    bool seasonal = true;
    bool stepwise = true;
    std::optional<int> d;
    /// Seasonal differencing order; 0 unless set.
    std::optional<int> D;
    bool allow_drift = true;
    bool allow_mean = true;
    /// Candidate fits may run on worker threads.
    bool parallel = true;
    int max_models = 94;
    /// Candidate fits reject roots within 1.01 of the unit circle.
    FitOptions fit = search_fit_options();

    [[nodiscard]] static FitOptions search_fit_options() {
        FitOptions f;
        f.root_margin = 1.01;
        return f;
    }
};

struct TraceEntry {
    ModelOrder order;
    /// Criterion values; +infinity for candidates that could not be used.
    double aic = 0;
    double aicc = 0;
    double bic = 0;
    /// Empty on success, otherwise the reason the candidate scored infinite.
    std::string failure;

    [[nodiscard]] double value(Criterion c) const;
    [[nodiscard]] bool finite() const;
};

using SearchTrace = std::vector<TraceEntry>;

struct SelectionResult {
    FittedModel model;
    SearchTrace trace;
    Criterion criterion = Criterion::aic;
};

/// Smallest d in 0..max_d for which the KPSS level test does not reject at 5%.
[[nodiscard]] int choose_d(const TimeSeries& ts, int max_d = 2);

/// Stepwise (or exhaustive) order search. Throws SelectionFailed when no
/// candidate could be fitted.
[[nodiscard]] SelectionResult auto_select(const TimeSeries& ts, const SearchConfig& config = {});

/// "ARIMA(3,1,0)                     : -398.502" style lines, "Inf" for failures.
[[nodiscard]] std::string format_trace(const SearchTrace& trace, Criterion c = Criterion::aic);

}  // namespace bj
