#include "bj/selection.hpp"

#include "bj/error.hpp"
#include "bj/stationarity.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <limits>
#include <map>
#include <thread>

#include <fmt/format.h>

namespace bj {

std::string to_string(Criterion c) {
    switch (c) {
        case Criterion::aic: return "aic";
        case Criterion::aicc: return "aicc";
        case Criterion::bic: return "bic";
    }
    return "aic";
}

Criterion parse_criterion(std::string_view text) {
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char ch) { return std::tolower(ch); });
    if (lower == "aic") return Criterion::aic;
    if (lower == "aicc") return Criterion::aicc;
    if (lower == "bic") return Criterion::bic;
    throw InvalidArgument(fmt::format("unknown criterion '{}' (expected aic, aicc or bic)", text));
}

double TraceEntry::value(Criterion c) const {
    switch (c) {
        case Criterion::aic: return aic;
        case Criterion::aicc: return aicc;
        case Criterion::bic: return bic;
    }
    return aic;
}

bool TraceEntry::finite() const { return failure.empty() && std::isfinite(aic); }

int choose_d(const TimeSeries& ts, int max_d) {
    if (ts.size() < 10) {
        throw InvalidArgument("choose_d needs at least 10 observations");
    }
    std::vector<double> x(ts.values().begin(), ts.values().end());
    for (int d = 0; d < max_d; ++d) {
        try {
            if (!kpss_test(x).rejects(0.05)) {
                return d;
            }
        } catch (const DegenerateSeries&) {
            return d;
        }
        if (x.size() < 3) {
            return d;
        }
        x = difference(x);
    }
    return max_d;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Candidate {
    TraceEntry entry;
    std::optional<FittedModel> model;
};

Candidate evaluate(const TimeSeries& ts, const ModelOrder& order, const FitOptions& opts) {
    Candidate c;
    c.entry.order = order;
    try {
        auto m = fit(ts, order, opts);
        if (!std::isfinite(m.aicc)) {
            c.entry.failure = "AICc undefined";
        } else {
            c.entry.aic = m.aic;
            c.entry.aicc = m.aicc;
            c.entry.bic = m.bic;
            c.model = std::move(m);
        }
    } catch (const ComputeError& e) {
        c.entry.failure = e.what();
    }
    if (!c.entry.failure.empty()) {
        c.entry.aic = c.entry.aicc = c.entry.bic = kInf;
    }
    return c;
}

// Fits every order, on worker threads when allowed; results keep input order.
std::vector<Candidate> evaluate_all(const TimeSeries& ts, const std::vector<ModelOrder>& orders,
                                    const SearchConfig& cfg) {
    std::vector<Candidate> out(orders.size());
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const auto workers = std::min<std::size_t>(cfg.parallel ? hw : 1, orders.size());
    if (workers <= 1) {
        for (std::size_t i = 0; i < orders.size(); ++i) {
            out[i] = evaluate(ts, orders[i], cfg.fit);
        }
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < orders.size(); i = next++) {
                out[i] = evaluate(ts, orders[i], cfg.fit);
            }
        });
    }
    return out;
}

int arma_key(const ModelOrder& o) { return o.p + o.q + o.P + o.Q + (o.drift ? 1 : 0); }

// Strict preference: lower criterion, then fewer parameters, then smaller
// (p, q, P, Q, drift).
bool preferred(const TraceEntry& a, const TraceEntry& b, Criterion c) {
    const double va = a.value(c);
    const double vb = b.value(c);
    if (va != vb) return va < vb;
    if (!std::isfinite(va)) return false;
    if (arma_key(a.order) != arma_key(b.order)) return arma_key(a.order) < arma_key(b.order);
    const auto ta = std::tie(a.order.p, a.order.q, a.order.P, a.order.Q, a.order.drift);
    const auto tb = std::tie(b.order.p, b.order.q, b.order.P, b.order.Q, b.order.drift);
    return ta < tb;
}

class StepwiseSearch {
public:
    StepwiseSearch(const TimeSeries& ts, const SearchConfig& cfg, int d, int D, int m)
        : ts_(ts), cfg_(cfg), d_(d), D_(D), m_(m) {}

    SelectionResult run(int max_p, int max_q, int max_P, int max_Q, bool allow_constant) {
        p_ = std::min(2, max_p);
        q_ = std::min(2, max_q);
        P_ = m_ > 1 ? std::min(1, max_P) : 0;
        Q_ = m_ > 1 ? std::min(1, max_Q) : 0;
        constant_ = allow_constant;

        // Starting models, fitted as one batch.
        std::vector<ModelOrder> initial{make(p_, q_, P_, Q_, constant_), make(0, 0, 0, 0, constant_)};
        if (max_p > 0 || max_P > 0) {
            initial.push_back(make(max_p > 0 ? 1 : 0, 0, (m_ > 1 && max_P > 0) ? 1 : 0, 0, constant_));
        }
        if (max_q > 0 || max_Q > 0) {
            initial.push_back(make(0, max_q > 0 ? 1 : 0, 0, (m_ > 1 && max_Q > 0) ? 1 : 0, constant_));
        }
        if (constant_) {
            initial.push_back(make(0, 0, 0, 0, false));
        }
        std::vector<ModelOrder> fresh;
        for (const auto& o : initial) {
            if (std::find(fresh.begin(), fresh.end(), o) == fresh.end()) fresh.push_back(o);
        }
        auto results = evaluate_all(ts_, fresh, cfg_);
        for (auto& c : results) {
            const ModelOrder o = c.entry.order;
            if (record(std::move(c))) {
                adopt(o);
            }
        }

        const int nmodels = cfg_.max_models;
        std::size_t startk = 0;
        while (startk < trace_.size() && static_cast<int>(trace_.size()) < nmodels) {
            startk = trace_.size();
            step(max_p, max_q, max_P, max_Q, allow_constant);
        }

        if (!best_ || !trace_[*best_].finite()) {
            throw SelectionFailed("no candidate model could be fitted");
        }
        SelectionResult out;
        out.model = *models_[*best_];
        out.trace = std::move(trace_);
        out.criterion = cfg_.criterion;
        return out;
    }

private:
    ModelOrder make(int p, int q, int P, int Q, bool constant) const {
        ModelOrder o;
        o.p = p;
        o.d = d_;
        o.q = q;
        o.P = P;
        o.D = D_;
        o.Q = Q;
        o.s = (P + Q + D_ > 0) ? m_ : 1;
        o.drift = constant;
        return o;
    }

    // Appends to the trace; true when the candidate becomes the best.
    bool record(Candidate c) {
        trace_.push_back(c.entry);
        models_.push_back(std::move(c.model));
        seen_[trace_.back().order] = trace_.size() - 1;
        if (!best_ || preferred(trace_.back(), trace_[*best_], cfg_.criterion)) {
            const bool first = !best_;
            best_ = trace_.size() - 1;
            return !first || trace_.back().finite();
        }
        return false;
    }

    void adopt(const ModelOrder& o) {
        p_ = o.p;
        q_ = o.q;
        P_ = o.P;
        Q_ = o.Q;
        constant_ = o.drift;
    }

    // Tries one neighbour; true when it was new and improved on the best.
    bool attempt(int p, int q, int P, int Q, bool constant) {
        const auto o = make(p, q, P, Q, constant);
        if (seen_.contains(o)) return false;
        if (static_cast<int>(trace_.size()) >= cfg_.max_models) return false;
        if (record(evaluate(ts_, o, cfg_.fit))) {
            adopt(o);
            return true;
        }
        return false;
    }

    bool step(int max_p, int max_q, int max_P, int max_Q, bool allow_constant) {
        const int p = p_, q = q_, P = P_, Q = Q_;
        const bool c = constant_;
        if (P > 0 && attempt(p, q, P - 1, Q, c)) return true;
        if (Q > 0 && attempt(p, q, P, Q - 1, c)) return true;
        if (P < max_P && attempt(p, q, P + 1, Q, c)) return true;
        if (Q < max_Q && attempt(p, q, P, Q + 1, c)) return true;
        if (Q > 0 && P > 0 && attempt(p, q, P - 1, Q - 1, c)) return true;
        if (Q < max_Q && P > 0 && attempt(p, q, P - 1, Q + 1, c)) return true;
        if (Q > 0 && P < max_P && attempt(p, q, P + 1, Q - 1, c)) return true;
        if (Q < max_Q && P < max_P && attempt(p, q, P + 1, Q + 1, c)) return true;
        if (p > 0 && attempt(p - 1, q, P, Q, c)) return true;
        if (q > 0 && attempt(p, q - 1, P, Q, c)) return true;
        if (p < max_p && attempt(p + 1, q, P, Q, c)) return true;
        if (q < max_q && attempt(p, q + 1, P, Q, c)) return true;
        if (q > 0 && p > 0 && attempt(p - 1, q - 1, P, Q, c)) return true;
        if (q < max_q && p > 0 && attempt(p - 1, q + 1, P, Q, c)) return true;
        if (q > 0 && p < max_p && attempt(p + 1, q - 1, P, Q, c)) return true;
        if (q < max_q && p < max_p && attempt(p + 1, q + 1, P, Q, c)) return true;
        if (allow_constant && attempt(p, q, P, Q, !c)) return true;
        return false;
    }

    const TimeSeries& ts_;
    const SearchConfig& cfg_;
    int d_, D_, m_;
    int p_ = 0, q_ = 0, P_ = 0, Q_ = 0;
    bool constant_ = false;
    SearchTrace trace_;
    std::vector<std::optional<FittedModel>> models_;
    std::map<ModelOrder, std::size_t> seen_;
    std::optional<std::size_t> best_;
};

}  // namespace

SelectionResult auto_select(const TimeSeries& ts, const SearchConfig& config) {
    if (ts.size() < 10) {
        throw InvalidArgument("auto_select needs at least 10 observations");
    }
    if (config.max_p < 0 || config.max_q < 0 || config.max_P < 0 || config.max_Q < 0 || config.max_order < 0 ||
        config.max_d < 0 || config.max_D < 0 || config.max_models < 1) {
        throw InvalidArgument("search caps must be non-negative");
    }
    const int m = config.seasonal && ts.frequency() > 1 ? ts.frequency() : 1;
    const int D = config.D.value_or(0);
    if (D < 0 || D > config.max_D || (D > 0 && m == 1)) {
        throw InvalidArgument(fmt::format("seasonal differencing D = {} is not available here", D));
    }
    int d = 0;
    if (config.d) {
        d = *config.d;
        if (d < 0 || d > config.max_d) {
            throw InvalidArgument(fmt::format("d = {} is outside 0..{}", d, config.max_d));
        }
    } else {
        const TimeSeries base = D > 0 ? difference(ts, m, D) : ts;
        d = choose_d(base, config.max_d);
    }

    const int n = static_cast<int>(ts.size());
    int max_p = std::min(config.max_p, n / 3);
    int max_q = std::min(config.max_q, n / 3);
    int max_P = m > 1 ? std::min(config.max_P, n / 3 / m) : 0;
    int max_Q = m > 1 ? std::min(config.max_Q, n / 3 / m) : 0;
    if (m > 1 && max_P > 0) max_p = std::min(max_p, m - 1);
    if (m > 1 && max_Q > 0) max_q = std::min(max_q, m - 1);

    const bool allow_drift = config.allow_drift && d + D == 1;
    const bool allow_mean = config.allow_mean && d + D == 0;
    const bool allow_constant = allow_drift || allow_mean;

    if (config.stepwise) {
        StepwiseSearch search(ts, config, d, D, m);
        return search.run(max_p, max_q, max_P, max_Q, allow_constant);
    }

    std::vector<ModelOrder> grid;
    for (int p = 0; p <= max_p; ++p) {
        for (int q = 0; q <= max_q; ++q) {
            for (int P = 0; P <= max_P; ++P) {
                for (int Q = 0; Q <= max_Q; ++Q) {
                    if (p + q + P + Q > config.max_order) continue;
                    for (int k = allow_constant ? 1 : 0; k >= 0; --k) {
                        grid.push_back({p, d, q, P, D, Q, m, k == 1});
                    }
                }
            }
        }
    }
    auto results = evaluate_all(ts, grid, config);
    SelectionResult out;
    out.criterion = config.criterion;
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < results.size(); ++i) {
        out.trace.push_back(results[i].entry);
        if (results[i].entry.finite() && (!best || preferred(results[i].entry, results[*best].entry, config.criterion))) {
            best = i;
        }
    }
    if (!best) {
        throw SelectionFailed("no candidate model could be fitted");
    }
    out.model = std::move(*results[*best].model);
    return out;
}

std::string format_trace(const SearchTrace& trace, Criterion c) {
    std::size_t width = 0;
    for (const auto& e : trace) width = std::max(width, e.order.to_string().size());
    std::string out;
    for (const auto& e : trace) {
        const double v = e.value(c);
        out += fmt::format("{:<{}} : {}\n", e.order.to_string(), width,
                           std::isfinite(v) ? fmt::format("{:.4f}", v) : std::string("Inf"));
    }
    return out;
}

}  // namespace bj
