#include "cli/app.hpp"

#include "bj/correlation.hpp"
#include "bj/diagnostics.hpp"
#include "bj/error.hpp"
#include "bj/estimation.hpp"
#include "bj/forecast.hpp"
#include "bj/ingest.hpp"
#include "bj/report.hpp"
#include "bj/selection.hpp"
#include "bj/stationarity.hpp"
#include "cli/plot.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>

#include <fmt/format.h>

namespace bj::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    bool json = false;
    std::string plot_dir;
    std::string csv;
    std::string component = "total";

    int lags = 15;
    int diff = 0;

    std::string test_kind;
    std::optional<int> adf_lag;
    std::string null = "level";

    std::string order;
    std::string seasonal;
    bool drift = false;

    std::string criterion = "aic";
    bool trace = false;
    bool exhaustive = false;
    std::optional<int> d;

    std::optional<int> lb_lags;
    std::optional<int> fitdf;
    int residual_adf_lag = 1;
    int acf_lags = 15;

    int horizon = 8;
    std::string levels = "95";
};

struct Result {
    json data;
    std::string text;
    std::vector<std::string> warnings;
    std::vector<std::filesystem::path> plots;
};

struct Input {
    TimeSeries ts;
    std::string name;
    std::vector<std::string> warnings;
};

Input load(const Options& o) {
    Dataset ds = o.csv.empty() || o.csv == "fixture" ? load_fixture() : load_csv(o.csv);
    const auto component = parse_component(o.component);
    Input in;
    in.ts = to_timeseries(ds.records, component);
    in.name = fmt::format("IPR ({})", to_string(component));
    in.warnings = std::move(ds.warnings);
    return in;
}

std::vector<int> parse_ints(const std::string& text, std::size_t count, const std::string& what) {
    std::vector<int> out;
    std::string_view rest = text;
    while (true) {
        const auto comma = rest.find(',');
        auto item = rest.substr(0, comma);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        int v = 0;
        const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size() || v < 0) {
            throw UsageError(fmt::format("{} must be {} comma-separated non-negative integers, got '{}'", what,
                                         count, text));
        }
        out.push_back(v);
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    if (out.size() != count) {
        throw UsageError(fmt::format("{} must be {} comma-separated non-negative integers, got '{}'", what, count,
                                     text));
    }
    return out;
}

std::vector<double> parse_levels(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        double v = 0;
        const auto* first = item.data();
        const auto* last = item.data() + item.size();
        while (first < last && *first == ' ') ++first;
        const auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc{} || ptr != last) {
            throw UsageError(fmt::format("--level expects numbers such as 95,99 or 0.95, got '{}'", text));
        }
        if (v >= 1.0) v /= 100.0;
        if (!(v > 0.0 && v < 1.0)) {
            throw UsageError(fmt::format("confidence level '{}' is outside (0, 100)", item));
        }
        out.push_back(v);
    }
    if (out.empty()) {
        throw UsageError("--level needs at least one value");
    }
    return out;
}

std::vector<std::string> labels_of(const TimeSeries& ts) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < ts.size(); ++i) out.push_back(ts.label_at(static_cast<std::ptrdiff_t>(i)));
    return out;
}

TimeSeries differenced(const TimeSeries& ts, int times) {
    if (times < 0) throw UsageError("--diff must be non-negative");
    return times == 0 ? ts : difference(ts, 1, times);
}

void plot_series(const Options& o, Result& r, const TimeSeries& ts, const std::string& name,
                 const std::string& title) {
    if (o.plot_dir.empty()) return;
    LineChart chart{title, labels_of(ts), {PlotLine{ts.vector(), "", false}}, {}};
    auto paths = write_plot(o.plot_dir, name, chart);
    r.plots.insert(r.plots.end(), paths.begin(), paths.end());
}

void plot_correlogram(const Options& o, Result& r, const std::vector<CorrelogramRow>& rows, double bound,
                      const std::string& name, const std::string& title) {
    if (o.plot_dir.empty()) return;
    BarChart chart{title, {}, {}, bound};
    for (const auto& row : rows) {
        if (row.lag == 0) continue;
        chart.lags.push_back(row.lag);
        chart.values.push_back(row.value);
    }
    auto paths = write_plot(o.plot_dir, name, chart);
    r.plots.insert(r.plots.end(), paths.begin(), paths.end());
}

FittedModel model_for(const Options& o, const TimeSeries& ts, std::optional<SelectionResult>* selection = nullptr) {
    if (o.order.empty()) {
        if (!o.seasonal.empty() || o.drift) {
            throw UsageError("--seasonal and --drift need --order");
        }
        SearchConfig cfg;
        cfg.criterion = parse_criterion(o.criterion);
        cfg.stepwise = !o.exhaustive;
        cfg.d = o.d;
        auto sel = auto_select(ts, cfg);
        FittedModel m = sel.model;
        if (selection) *selection = std::move(sel);
        return m;
    }
    const auto pdq = parse_ints(o.order, 3, "--order");
    ModelOrder order;
    order.p = pdq[0];
    order.d = pdq[1];
    order.q = pdq[2];
    if (!o.seasonal.empty()) {
        const auto s = parse_ints(o.seasonal, 4, "--seasonal");
        order.P = s[0];
        order.D = s[1];
        order.Q = s[2];
        order.s = s[3];
    }
    order.drift = o.drift;
    return fit(ts, order);
}

Result cmd_ipr(const Options& o) {
    const auto in = load(o);
    Result r;
    r.warnings = in.warnings;
    r.data = report::to_json(in.ts);
    r.text = report::render_series(in.ts, in.name);
    plot_series(o, r, in.ts, "series", in.name);
    return r;
}

Result cmd_summary(const Options& o) {
    const auto in = load(o);
    const auto s = summary(in.ts);
    Result r;
    r.warnings = in.warnings;
    r.data = {{"n", in.ts.size()}, {"statistics", report::to_json(s)}};
    r.text = fmt::format("Summary statistics for {} (n = {})\n", in.name, in.ts.size()) + report::render_summary(s);
    plot_series(o, r, in.ts, "series", in.name);
    return r;
}

Result cmd_correlogram(const Options& o, bool partial) {
    const auto in = load(o);
    const auto x = differenced(in.ts, o.diff);
    if (o.lags < 1) throw UsageError("--lags must be at least 1");
    const auto rows = partial ? pacf(x, o.lags) : acf(x, o.lags);
    const double bound = significance_bound(static_cast<int>(x.size()));
    const std::string what = partial ? "Partial autocorrelations" : "Autocorrelations";
    const std::string series = o.diff > 0 ? fmt::format("diff({}, {})", in.name, o.diff) : in.name;
    Result r;
    r.warnings = in.warnings;
    r.data = report::to_json(rows, bound);
    r.data["n"] = x.size();
    r.text = report::render_correlogram(rows, fmt::format("{} of series '{}', by lag", what, series), bound);
    plot_correlogram(o, r, rows, bound, partial ? "pacf" : "acf", fmt::format("{} of {}", what, series));
    return r;
}

Result cmd_test(const Options& o) {
    const auto in = load(o);
    const auto x = differenced(in.ts, o.diff);
    const std::string series = o.diff > 0 ? fmt::format("diff({}, {})", in.name, o.diff) : in.name;
    TestReport rep;
    KpssNull null = KpssNull::level;
    if (o.test_kind == "adf") {
        rep = adf_test(x.values(), o.adf_lag);
    } else {
        if (o.adf_lag) throw UsageError("--lag applies to the adf test only");
        if (o.test_kind == "pp") {
            rep = pp_test(x.values());
        } else {
            null = o.null == "trend" ? KpssNull::trend : KpssNull::level;
            rep = kpss_test(x.values(), null);
        }
    }
    Result r;
    r.warnings = in.warnings;
    r.data = report::to_json(rep);
    if (rep.kind == TestKind::kpss) r.data["kpss_null"] = o.null;
    r.text = report::render_test(rep, series, null);
    plot_series(o, r, x, "series", series);
    return r;
}

void plot_residuals(const Options& o, Result& r, const FittedModel& m) {
    if (o.plot_dir.empty()) return;
    plot_series(o, r, m.residuals, "residuals", "Residuals from " + m.order.to_string());
    const int lags = std::min<int>(o.acf_lags, static_cast<int>(m.residuals.size()) - 1);
    const double bound = significance_bound(static_cast<int>(m.residuals.size()));
    plot_correlogram(o, r, acf(m.residuals, lags), bound, "residual_acf", "ACF of residuals");
    plot_correlogram(o, r, pacf(m.residuals, lags), bound, "residual_pacf", "PACF of residuals");
}

Result cmd_fit(const Options& o) {
    if (o.order.empty()) throw UsageError("fit needs --order p,d,q");
    const auto in = load(o);
    const auto m = model_for(o, in.ts);
    Result r;
    r.warnings = in.warnings;
    r.data = report::to_json(m);
    r.text = report::render_fit(m);
    plot_residuals(o, r, m);
    return r;
}

Result cmd_auto(const Options& o) {
    const auto in = load(o);
    std::optional<SelectionResult> sel;
    const auto m = model_for(o, in.ts, &sel);
    const auto crit = sel->criterion;
    std::string name = to_string(crit);
    std::transform(name.begin(), name.end(), name.begin(), [](unsigned char ch) { return std::toupper(ch); });
    const double value = crit == Criterion::aic ? m.aic : crit == Criterion::aicc ? m.aicc : m.bic;

    Result r;
    r.warnings = in.warnings;
    r.data = {{"criterion", to_string(crit)},
              {"selected", report::to_json(m)},
              {"trace", report::to_json(sel->trace)}};
    if (o.trace) {
        r.text = report::render_trace(sel->trace, crit) + "\n";
    }
    r.text += fmt::format("Best model: {}   {} = {}\n\n", m.order.to_string(), name, report::num(value));
    r.text += report::render_fit(m);
    plot_residuals(o, r, m);
    return r;
}

Result cmd_diagnose(const Options& o) {
    const auto in = load(o);
    const auto m = model_for(o, in.ts);
    const auto& res = m.residuals;
    const int fitdf = o.fitdf.value_or(m.order.arma_count());
    const int lb_lags = o.lb_lags.value_or(default_ljung_box_lags(res.size(), in.ts.frequency(), fitdf));
    const auto lb = ljung_box(res.values(), lb_lags, fitdf);
    const auto ks = ks_normality(res.values());
    const auto adf = adf_test(res.values(), o.residual_adf_lag);
    const auto pp = pp_test(res.values());
    const auto kpss = kpss_test(res.values());
    const auto acc = training_accuracy(m);
    const int lags = std::min<int>(o.acf_lags, static_cast<int>(res.size()) - 1);
    const auto racf = acf(res, lags);
    const auto rpacf = pacf(res, lags);
    const double bound = significance_bound(static_cast<int>(res.size()));

    Result r;
    r.warnings = in.warnings;
    r.data = {{"model", report::to_json(m)},
              {"ljung_box", report::to_json(lb)},
              {"ks_normality", report::to_json(ks)},
              {"adf", report::to_json(adf)},
              {"pp", report::to_json(pp)},
              {"kpss", report::to_json(kpss)},
              {"accuracy", report::to_json(acc)},
              {"residual_acf", report::to_json(racf, bound)},
              {"residual_pacf", report::to_json(rpacf, bound)}};
    const std::string data_name = "residuals of " + m.order.to_string();
    r.text = fmt::format("Residual diagnostics for {}\n\n", m.order.to_string());
    r.text += report::render_ljung_box(lb) + "\n";
    r.text += report::render_normality(ks) + "\n";
    r.text += report::render_test(adf, data_name) + "\n";
    r.text += report::render_test(pp, data_name) + "\n";
    r.text += report::render_test(kpss, data_name) + "\n";
    r.text += "Training set accuracy\n" + report::render_accuracy(acc) + "\n";
    r.text += report::render_correlogram(racf, "Autocorrelations of residuals, by lag", bound) + "\n";
    r.text += report::render_correlogram(rpacf, "Partial autocorrelations of residuals, by lag", bound);
    plot_residuals(o, r, m);
    return r;
}

Result cmd_forecast(const Options& o) {
    if (o.horizon < 1) throw UsageError("--h must be at least 1");
    const auto levels = parse_levels(o.levels);
    const auto in = load(o);
    const auto m = model_for(o, in.ts);
    const auto f = forecast(m, o.horizon, levels);

    Result r;
    r.warnings = in.warnings;
    r.data = report::to_json(f);
    r.data["model"] = report::to_json(m);
    r.text = fmt::format("Forecasts of {} from {}\n\n", in.name, m.order.to_string()) + report::render_forecast(f);

    if (!o.plot_dir.empty()) {
        const std::size_t n = in.ts.size();
        const std::size_t h = f.points.size();
        const double nan = std::numeric_limits<double>::quiet_NaN();
        LineChart chart;
        chart.title = fmt::format("Forecasts from {}", m.order.to_string());
        chart.x_labels = labels_of(in.ts);
        chart.x_labels.insert(chart.x_labels.end(), f.labels.begin(), f.labels.end());
        std::vector<double> history(in.ts.vector());
        history.resize(n + h, nan);
        std::vector<double> path(n + h, nan);
        path[n - 1] = in.ts.back();
        std::copy(f.points.begin(), f.points.end(), path.begin() + static_cast<std::ptrdiff_t>(n));
        chart.lines = {PlotLine{history, "observed", false}, PlotLine{path, "forecast", false}};
        for (auto it = f.bands.rbegin(); it != f.bands.rend(); ++it) {
            PlotBand band{std::vector<double>(n + h, nan), std::vector<double>(n + h, nan), 0.2};
            std::copy(it->lower.begin(), it->lower.end(), band.lower.begin() + static_cast<std::ptrdiff_t>(n));
            std::copy(it->upper.begin(), it->upper.end(), band.upper.begin() + static_cast<std::ptrdiff_t>(n));
            chart.bands.push_back(std::move(band));
        }
        auto paths = write_plot(o.plot_dir, "forecast", chart);
        r.plots.insert(r.plots.end(), paths.begin(), paths.end());
    }
    return r;
}

bool default_json() {
    const char* env = std::getenv("BJ_OUTPUT");
    return env != nullptr && std::string_view(env) == "json";
}

}  // namespace

Outcome run(const std::vector<std::string>& args) {
    Options o;
    o.json = default_json();

    CLI::App app{"Box-Jenkins ARIMA toolkit for quarterly insurance penetration data", "bj"};
    app.require_subcommand(1);
    app.add_flag("--json", o.json, "Emit a single JSON object instead of text");
    app.add_option("--plot", o.plot_dir, "Write SVG and ASCII plots into this directory");

    const auto components = CLI::IsMember({"total", "life", "nonlife"});
    auto data_options = [&](CLI::App* sub) {
        sub->fallthrough();
        sub->add_option("csv", o.csv, "Premium/GDP CSV file (default: bundled fixture)");
        sub->add_option("--component", o.component, "Premium component: total, life or nonlife")->check(components);
    };
    auto model_options = [&](CLI::App* sub, bool auto_default) {
        sub->add_option("--order", o.order, auto_default ? "p,d,q (default: automatic selection)" : "p,d,q");
        sub->add_option("--seasonal", o.seasonal, "P,D,Q,s");
        sub->add_flag("--drift", o.drift, "Include a drift (mean of the differenced series)");
        if (auto_default) {
            sub->add_option("--criterion", o.criterion, "Selection criterion when --order is absent")
                ->check(CLI::IsMember({"aic", "aicc", "bic"}));
        }
    };

    auto* ipr = app.add_subcommand("ipr", "Print the insurance penetration rate series");
    data_options(ipr);

    auto* summ = app.add_subcommand("summary", "Summary statistics of the rate series");
    data_options(summ);

    auto* acf_cmd = app.add_subcommand("acf", "Sample autocorrelations");
    data_options(acf_cmd);
    acf_cmd->add_option("--lags", o.lags, "Largest lag")->capture_default_str();
    acf_cmd->add_option("--diff", o.diff, "Difference the series this many times first");

    auto* pacf_cmd = app.add_subcommand("pacf", "Sample partial autocorrelations");
    data_options(pacf_cmd);
    pacf_cmd->add_option("--lags", o.lags, "Largest lag")->capture_default_str();
    pacf_cmd->add_option("--diff", o.diff, "Difference the series this many times first");

    auto* test = app.add_subcommand("test", "Unit-root and stationarity tests");
    test->fallthrough();
    test->add_option("kind", o.test_kind, "adf, pp or kpss")->required()->check(CLI::IsMember({"adf", "pp", "kpss"}));
    test->add_option("csv", o.csv, "Premium/GDP CSV file (default: bundled fixture)");
    test->add_option("--component", o.component, "Premium component: total, life or nonlife")->check(components);
    test->add_option("--lag", o.adf_lag, "ADF lag order (default trunc((n-1)^(1/3)))");
    test->add_option("--null", o.null, "KPSS null hypothesis: level or trend")
        ->check(CLI::IsMember({"level", "trend"}));
    test->add_option("--diff", o.diff, "Difference the series this many times first");

    auto* fit_cmd = app.add_subcommand("fit", "Fit an ARIMA model by maximum likelihood");
    data_options(fit_cmd);
    model_options(fit_cmd, false);

    auto* auto_cmd = app.add_subcommand("auto", "Stepwise automatic order selection");
    data_options(auto_cmd);
    auto_cmd->add_option("--criterion", o.criterion, "aic, aicc or bic")->check(CLI::IsMember({"aic", "aicc", "bic"}));
    auto_cmd->add_flag("--trace", o.trace, "Print every candidate model");
    auto_cmd->add_flag("--exhaustive", o.exhaustive, "Search the full order grid instead of stepping");
    auto_cmd->add_option("--d", o.d, "Fix the differencing order instead of testing for it");

    auto* diag = app.add_subcommand("diagnose", "Residual diagnostics and training-set accuracy");
    data_options(diag);
    model_options(diag, true);
    diag->add_option("--lags", o.lb_lags, "Ljung-Box lags (default min(2m or 10, n/5), at least fitdf+3)");
    diag->add_option("--fitdf", o.fitdf, "Degrees of freedom used by the model (default p+q+P+Q)");
    diag->add_option("--adf-lag", o.residual_adf_lag, "Lag order of the residual ADF test")->capture_default_str();
    diag->add_option("--acf-lags", o.acf_lags, "Largest residual ACF/PACF lag")->capture_default_str();

    auto* fc = app.add_subcommand("forecast", "Point forecasts with confidence bands");
    fc->set_help_flag("--help", "Print this help message and exit");
    data_options(fc);
    model_options(fc, true);
    fc->add_option("--h,--horizon", o.horizon, "Forecast horizon")->capture_default_str();
    fc->add_option("--level", o.levels, "Confidence levels, e.g. 95,99")->capture_default_str();

    Outcome outcome;
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        outcome.out = app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help();
        return outcome;
    } catch (const CLI::ParseError& e) {
        outcome.exit_code = kUsageError;
        outcome.err = fmt::format("error: {}\n\n{}", e.what(), app.help());
        return outcome;
    }

    auto* sub = app.get_subcommands().front();
    const std::string command = sub->get_name();
    auto fail = [&](int code, const char* kind, const std::string& message, const std::string& usage) {
        outcome.exit_code = code;
        outcome.err = fmt::format("error: {}\n{}", message, usage.empty() ? "" : "\n" + usage);
        if (o.json) {
            outcome.out =
                json{{"command", command}, {"error", {{"type", kind}, {"message", message}}}}.dump(2) + "\n";
        }
        return outcome;
    };
    Result result;
    try {
        if (sub == ipr) result = cmd_ipr(o);
        else if (sub == summ) result = cmd_summary(o);
        else if (sub == acf_cmd) result = cmd_correlogram(o, false);
        else if (sub == pacf_cmd) result = cmd_correlogram(o, true);
        else if (sub == test) result = cmd_test(o);
        else if (sub == fit_cmd) result = cmd_fit(o);
        else if (sub == auto_cmd) result = cmd_auto(o);
        else if (sub == diag) result = cmd_diagnose(o);
        else result = cmd_forecast(o);
    } catch (const UsageError& e) {
        return fail(kUsageError, "usage", e.what(), sub->help());
    } catch (const DataError& e) {
        return fail(kDataError, "data", e.what(), "");
    } catch (const std::exception& e) {
        return fail(kComputeError, "computation", e.what(), "");
    }

    outcome.plots = result.plots;
    if (o.json) {
        json plots = json::array();
        for (const auto& p : result.plots) plots.push_back(p.string());
        outcome.out = json{{"command", command}, {"result", result.data}, {"warnings", result.warnings}, {"plots", plots}}
                          .dump(2) + "\n";
    } else {
        outcome.out = result.text;
        for (const auto& w : result.warnings) outcome.err += "warning: " + w + "\n";
        for (const auto& p : result.plots) outcome.err += "wrote " + p.string() + "\n";
    }
    return outcome;
}

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    const auto outcome = run(args);
    std::cout << outcome.out << std::flush;
    std::cerr << outcome.err << std::flush;
    return outcome.exit_code;
}

}  // namespace bj::cli
