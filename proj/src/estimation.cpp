#include "bj/estimation.hpp"

#include "bj/error.hpp"
#include "bj/kalman.hpp"
#include "bj/optimizer.hpp"
#include "bj/polynomial.hpp"

#include <Eigen/Cholesky>

#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include <fmt/format.h>

namespace bj {

void ModelOrder::validate(int parameter_cap) const {
    if (p < 0 || d < 0 || q < 0 || P < 0 || D < 0 || Q < 0) {
        throw InvalidArgument("model orders must be non-negative");
    }
    if (s < 1) {
        throw InvalidArgument("seasonal period must be >= 1");
    }
    if (seasonal() && s < 2) {
        throw InvalidArgument("seasonal terms require a seasonal period of at least 2");
    }
    if (arma_count() > parameter_cap) {
        throw InvalidArgument(
            fmt::format("p+q+P+Q = {} exceeds the configured cap of {}", arma_count(), parameter_cap));
    }
    if (drift && d + D > 1) {
        throw InvalidArgument("a drift term needs d + D <= 1");
    }
}

std::string ModelOrder::to_string() const {
    std::string out = fmt::format("ARIMA({},{},{})", p, d, q);
    if (seasonal()) {
        out += fmt::format("({},{},{})[{}]", P, D, Q, s);
    }
    if (drift) {
        out += d + D == 0 ? " with non-zero mean" : " with drift";
    }
    return out;
}

std::vector<std::string> FittedModel::coefficient_names() const {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < ar.size(); ++i) names.push_back(fmt::format("ar{}", i + 1));
    for (std::size_t i = 0; i < ma.size(); ++i) names.push_back(fmt::format("ma{}", i + 1));
    for (std::size_t i = 0; i < sar.size(); ++i) names.push_back(fmt::format("sar{}", i + 1));
    for (std::size_t i = 0; i < sma.size(); ++i) names.push_back(fmt::format("sma{}", i + 1));
    if (drift) names.emplace_back(order.differencing_span() == 0 ? "mean" : "drift");
    return names;
}

std::vector<double> FittedModel::coefficients() const {
    std::vector<double> out;
    out.insert(out.end(), ar.begin(), ar.end());
    out.insert(out.end(), ma.begin(), ma.end());
    out.insert(out.end(), sar.begin(), sar.end());
    out.insert(out.end(), sma.begin(), sma.end());
    if (drift) out.push_back(*drift);
    return out;
}

std::vector<double> FittedModel::fitted_values() const {
    std::vector<double> out(data.size());
    for (std::size_t i = 0; i < data.size(); ++i) {
        out[i] = data[i] - residuals[i];
    }
    return out;
}

std::vector<double> FittedModel::effective_residuals() const {
    const auto skip = static_cast<std::size_t>(order.differencing_span());
    return {residuals.values().begin() + static_cast<std::ptrdiff_t>(skip), residuals.values().end()};
}

InformationCriteria information_criteria(double loglik, int k, int n) {
    if (n <= k + 1) {
        throw UndefinedCriterion(fmt::format("AICc undefined for n = {} and k = {}", n, k));
    }
    InformationCriteria ic;
    const double kd = k;
    ic.aic = -2.0 * loglik + 2.0 * kd;
    ic.aicc = ic.aic + 2.0 * kd * (kd + 1.0) / (n - kd - 1.0);
    ic.bic = ic.aic + kd * (std::log(static_cast<double>(n)) - 2.0);
    return ic;
}

std::vector<double> difference_for(std::span<const double> y, const ModelOrder& order) {
    std::vector<double> w(y.begin(), y.end());
    if (order.d > 0) {
        w = difference(w, 1, order.d);
    }
    if (order.D > 0) {
        w = difference(w, order.s, order.D);
    }
    return w;
}

namespace {

struct Coefficients {
    std::vector<double> ar, ma, sar, sma;
    double mean = 0;

    [[nodiscard]] std::vector<double> phi(int s) const { return poly::expand_ar(ar, sar, s); }
    [[nodiscard]] std::vector<double> theta(int s) const { return poly::expand_ma(ma, sma, s); }
};

Coefficients unpack(const ModelOrder& o, std::span<const double> params) {
    const auto need = static_cast<std::size_t>(o.coefficient_count());
    if (params.size() < need) {
        throw InvalidArgument(fmt::format("expected {} coefficients for {}, got {}", need, o.to_string(),
                                          params.size()));
    }
    Coefficients c;
    auto it = params.begin();
    auto take = [&](int count) {
        std::vector<double> v(it, it + count);
        it += count;
        return v;
    };
    c.ar = take(o.p);
    c.ma = take(o.q);
    c.sar = take(o.P);
    c.sma = take(o.Q);
    if (o.drift) {
        c.mean = *it;
    }
    return c;
}

// Unconstrained optimiser variables -> ARMA coefficients. MA blocks use the
// AR map with a sign flip so 1 + sum theta_i B^i is invertible.
Coefficients from_unconstrained(const ModelOrder& o, std::span<const double> u) {
    Coefficients c;
    std::size_t at = 0;
    auto block = [&](int count, double sign) {
        auto v = poly::unconstrained_to_ar(u.subspan(at, static_cast<std::size_t>(count)));
        at += static_cast<std::size_t>(count);
        for (double& x : v) x *= sign;
        return v;
    };
    c.ar = block(o.p, 1.0);
    c.ma = block(o.q, -1.0);
    c.sar = block(o.P, 1.0);
    c.sma = block(o.Q, -1.0);
    return c;
}

std::vector<double> to_unconstrained(const ModelOrder& o, const Coefficients& c) {
    std::vector<double> u;
    auto push = [&](const std::vector<double>& v, double sign) {
        std::vector<double> s(v);
        for (double& x : s) x *= sign;
        const auto b = poly::ar_to_unconstrained(s);
        u.insert(u.end(), b.begin(), b.end());
    };
    push(c.ar, 1.0);
    push(c.ma, -1.0);
    push(c.sar, 1.0);
    push(c.sma, -1.0);
    (void)o;
    return u;
}

struct Likelihood {
    double ssq = 0;
    double sum_log_f = 0;
    double mean = 0;
    std::size_t n = 0;

    [[nodiscard]] double sigma2_ml() const { return ssq / static_cast<double>(n); }
    [[nodiscard]] double concentrated() const {
        const double nd = static_cast<double>(n);
        return -0.5 * (nd * std::log(2.0 * std::numbers::pi * sigma2_ml()) + sum_log_f + nd);
    }
};

// Exact likelihood terms. With estimate_mean the mean is profiled out by GLS
// using a second filter column of ones.
Likelihood evaluate(std::span<const double> w, const ArmaStateSpace& ss, double mean, bool estimate_mean) {
    const auto n = static_cast<Eigen::Index>(w.size());
    Eigen::MatrixXd data(n, estimate_mean ? 2 : 1);
    for (Eigen::Index t = 0; t < n; ++t) {
        data(t, 0) = w[static_cast<std::size_t>(t)] - (estimate_mean ? 0.0 : mean);
        if (estimate_mean) data(t, 1) = 1.0;
    }
    const auto kf = kalman_filter(ss, data);
    Likelihood lk;
    lk.n = w.size();
    lk.sum_log_f = kf.sum_log_f;
    if (estimate_mean) {
        lk.mean = kf.cross(0, 1) / kf.cross(1, 1);
        lk.ssq = kf.cross(0, 0) - kf.cross(0, 1) * kf.cross(0, 1) / kf.cross(1, 1);
    } else {
        lk.mean = mean;
        lk.ssq = kf.cross(0, 0);
    }
    return lk;
}

double css_objective(std::span<const double> w, std::span<const double> phi, std::span<const double> theta,
                     double mean) {
    const std::size_t cond = phi.size();
    const std::size_t n = w.size();
    std::vector<double> e(n, 0.0);
    double ssq = 0;
    std::size_t used = 0;
    for (std::size_t t = cond; t < n; ++t) {
        double v = w[t] - mean;
        for (std::size_t i = 0; i < phi.size(); ++i) {
            v -= phi[i] * (w[t - i - 1] - mean);
        }
        for (std::size_t j = 0; j < theta.size() && j < t; ++j) {
            v -= theta[j] * e[t - j - 1];
        }
        e[t] = v;
        ssq += v * v;
        ++used;
    }
    if (used == 0 || !(ssq > 0.0)) {
        return std::numeric_limits<double>::infinity();
    }
    return 0.5 * std::log(ssq / static_cast<double>(used));
}

bool ar_stationary(std::span<const double> ar) {
    return ar.empty() || poly::min_root_modulus(poly::from_ar(ar)) > 1.0;
}

// Unrestricted conditional-sum-of-squares fit over the natural coefficients
// and the mean, used as the starting point of the exact-likelihood search.
Coefficients css_start(std::span<const double> w, const ModelOrder& o, const BfgsOptions& bo) {
    const auto narma = static_cast<std::size_t>(o.arma_count());
    const double nd = static_cast<double>(w.size());
    const double mu0 = o.drift ? mean(w) : 0.0;
    double scale = 0;
    for (double v : w) scale += (v - mu0) * (v - mu0);
    scale = std::sqrt(scale / nd) / std::sqrt(nd);
    if (!(scale > 0.0)) scale = 1.0;

    auto natural = [&](std::span<const double> x) {
        std::vector<double> params(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(narma));
        if (o.drift) params.push_back(mu0 + x[narma] * scale);
        return unpack(o, params);
    };
    auto objective = [&](std::span<const double> x) {
        const auto c = natural(x);
        return css_objective(w, c.phi(o.s), c.theta(o.s), c.mean);
    };
    const std::vector<double> x0(narma + (o.drift ? 1 : 0), 0.0);
    const auto r = minimize_bfgs(objective, x0, bo);
    return natural(r.x);
}

double min_root(const Coefficients& c, int s) {
    const double ar_root = poly::min_root_modulus(poly::from_ar(c.phi(s)));
    const double ma_root = poly::min_root_modulus(poly::from_ma(c.theta(s)));
    return std::min(ar_root, ma_root);
}

}  // namespace

double concentrated_loglikelihood(std::span<const double> differenced, const ModelOrder& order,
                                  std::span<const double> params) {
    const auto c = unpack(order, params);
    try {
        const auto ss = make_arma_state_space(c.phi(order.s), c.theta(order.s));
        const auto lk = evaluate(differenced, ss, order.drift ? c.mean : 0.0, false);
        const double v = lk.concentrated();
        return std::isfinite(v) ? v : -std::numeric_limits<double>::infinity();
    } catch (const ComputeError&) {
        return -std::numeric_limits<double>::infinity();
    }
}

double loglikelihood(std::span<const double> differenced, const ModelOrder& order, std::span<const double> params) {
    const auto ncoef = static_cast<std::size_t>(order.coefficient_count());
    if (params.size() != ncoef + 1) {
        throw InvalidArgument(fmt::format("loglikelihood: expected {} parameters (coefficients then sigma2), got {}",
                                          ncoef + 1, params.size()));
    }
    const double sigma2 = params.back();
    if (!(sigma2 > 0.0)) {
        throw InvalidArgument("loglikelihood: sigma2 must be positive");
    }
    const auto c = unpack(order, params.first(ncoef));
    const auto ss = make_arma_state_space(c.phi(order.s), c.theta(order.s));
    const auto lk = evaluate(differenced, ss, order.drift ? c.mean : 0.0, false);
    const double nd = static_cast<double>(lk.n);
    const double ll =
        -0.5 * (nd * std::log(2.0 * std::numbers::pi * sigma2) + lk.sum_log_f + lk.ssq / sigma2);
    if (!std::isfinite(ll)) {
        throw ComputeError("loglikelihood: non-finite value");
    }
    return ll;
}

FittedModel fit(const TimeSeries& ts, const ModelOrder& order, const FitOptions& opts) {
    order.validate(opts.parameter_cap);
    const auto span = static_cast<std::size_t>(order.differencing_span());
    if (ts.size() <= span) {
        throw InvalidArgument(fmt::format("series of length {} too short for {}", ts.size(), order.to_string()));
    }
    const auto w = difference_for(ts.values(), order);
    const int n_eff = static_cast<int>(w.size());
    const int ncoef = order.coefficient_count();
    if (n_eff < ncoef + 3) {
        throw InvalidArgument(fmt::format("{} observations after differencing are too few for {} coefficients",
                                          n_eff, ncoef));
    }
    const double nd = n_eff;
    const int s = order.s;
    const int narma = order.arma_count();

    Coefficients best;
    ArmaStateSpace ss;
    Likelihood lk;

    if (narma == 0) {
        ss = make_arma_state_space({}, {});
        lk = evaluate(w, ss, 0.0, order.drift);
        best.mean = lk.mean;
    } else {
        // Objective in optimiser units: minus the concentrated log-likelihood
        // per observation, up to constants.
        auto ml_objective = [&](std::span<const double> u) {
            try {
                const auto c = from_unconstrained(order, u);
                const auto state = make_arma_state_space(c.phi(s), c.theta(s));
                const auto l = evaluate(w, state, 0.0, order.drift);
                const double v = 0.5 * std::log(l.sigma2_ml()) + 0.5 * l.sum_log_f / nd;
                return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
            } catch (const ComputeError&) {
                return std::numeric_limits<double>::infinity();
            }
        };
        BfgsOptions bo;
        bo.max_iterations = opts.max_iterations;
        bo.reltol = opts.reltol;

        const auto css = css_start(w, order, bo);
        if (!ar_stationary(css.ar) || !ar_stationary(css.sar)) {
            throw FitFailed(fmt::format("{}: non-stationary AR part in the conditional-sum-of-squares start",
                                        order.to_string()));
        }
        const std::vector<double> zero(static_cast<std::size_t>(narma), 0.0);
        std::vector<std::vector<double>> starts;
        try {
            starts.push_back(to_unconstrained(order, css));
        } catch (const ComputeError&) {
            // MA part not invertible; the zero start still runs.
        }
        starts.push_back(zero);
        BfgsResult chosen;
        chosen.value = std::numeric_limits<double>::infinity();
        for (const auto& start : starts) {
            auto r = minimize_bfgs(ml_objective, start, bo);
            if (r.converged && r.value < chosen.value) {
                chosen = std::move(r);
            }
        }
        if (!std::isfinite(chosen.value)) {
            throw FitFailed(fmt::format("{}: likelihood optimisation did not converge", order.to_string()));
        }
        best = from_unconstrained(order, chosen.x);
        ss = make_arma_state_space(best.phi(s), best.theta(s));
        lk = evaluate(w, ss, 0.0, order.drift);
        best.mean = lk.mean;
    }

    if (narma > 0) {
        const double root = min_root(best, s);
        if (root < opts.root_margin) {
            throw NearNonstationary(fmt::format("{}: polynomial root modulus {:.6f} is within {} of the unit circle",
                                                order.to_string(), root, opts.root_margin));
        }
    }

    FittedModel fm;
    fm.order = order;
    fm.ar = best.ar;
    fm.ma = best.ma;
    fm.sar = best.sar;
    fm.sma = best.sma;
    if (order.drift) {
        fm.drift = best.mean;
    }
    fm.n_effective = n_eff;
    fm.loglik = lk.concentrated();
    fm.data = ts;

    // Observed information in natural coordinates.
    std::vector<double> natural = fm.coefficients();
    if (!natural.empty()) {
        const auto sd = std::sqrt(lk.sigma2_ml());
        std::vector<double> steps(natural.size(), 1e-4);
        if (order.drift) {
            steps.back() = 1e-3 * sd / std::sqrt(nd);
        }
        auto negll = [&](std::span<const double> x) {
            return -concentrated_loglikelihood(w, order, x);
        };
        const auto H = numeric_hessian(negll, natural, steps);
        const auto k = static_cast<Eigen::Index>(natural.size());
        Eigen::MatrixXd Hm(k, k);
        for (Eigen::Index i = 0; i < k; ++i) {
            for (Eigen::Index j = 0; j < k; ++j) {
                Hm(i, j) = H[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            }
        }
        Eigen::LLT<Eigen::MatrixXd> llt(Hm);
        if (!Hm.allFinite() || llt.info() != Eigen::Success) {
            throw FitFailed(fmt::format("{}: observed information matrix is not positive definite",
                                        order.to_string()));
        }
        const Eigen::MatrixXd cov = llt.solve(Eigen::MatrixXd::Identity(k, k));
        for (Eigen::Index i = 0; i < k; ++i) {
            fm.std_errors.push_back(std::sqrt(cov(i, i)));
        }
    }

    // Residuals: exact standardised innovations after differencing, diffuse
    // start for the observations consumed by it.
    std::vector<double> centred(w.size());
    for (std::size_t t = 0; t < w.size(); ++t) {
        centred[t] = w[t] - best.mean;
    }
    Eigen::Map<const Eigen::VectorXd> cmap(centred.data(), static_cast<Eigen::Index>(centred.size()));
    const auto kf = kalman_filter(ss, Eigen::MatrixXd(cmap), true);

    std::vector<double> resid;
    resid.reserve(ts.size());
    if (span > 0) {
        std::vector<double> level(ts.values().begin(), ts.values().end());
        if (order.drift) {
            const double per = order.d == 1 ? 1.0 : 1.0 / static_cast<double>(order.s);
            for (std::size_t t = 0; t < level.size(); ++t) {
                level[t] -= best.mean * per * static_cast<double>(t + 1);
            }
        }
        const auto delta = poly::differencing(order.d, order.D, s);
        resid = diffuse_leading_residuals(ss, delta, level, span);
    }
    resid.insert(resid.end(), kf.standardized.begin(), kf.standardized.end());
    fm.residuals = TimeSeries(std::move(resid), ts.start(), ts.frequency());

    double ssr = 0;
    for (double v : kf.standardized) {
        ssr += v * v;
    }
    fm.sigma2 = ssr / static_cast<double>(n_eff - ncoef);

    const int k = fm.parameter_count();
    fm.aic = -2.0 * fm.loglik + 2.0 * k;
    fm.bic = fm.aic + k * (std::log(nd) - 2.0);
    fm.aicc = n_eff > k + 1 ? information_criteria(fm.loglik, k, n_eff).aicc
                            : std::numeric_limits<double>::infinity();
    return fm;
}

}  // namespace bj
