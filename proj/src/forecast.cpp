#include "bj/forecast.hpp"

#include "bj/correlation.hpp"
#include "bj/error.hpp"
#include "bj/estimation.hpp"
#include "bj/kalman.hpp"
#include "bj/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

namespace bj {

const ForecastBand& ForecastResult::band(double level) const {
    for (const auto& b : bands) {
        if (std::abs(b.level - level) < 1e-9) {
            return b;
        }
    }
    throw InvalidArgument(fmt::format("no {:g}% band in this forecast", 100.0 * level));
}

std::vector<double> psi_weights(const FittedModel& model, int count) {
    if (count <= 0) {
        return {};
    }
    const auto& o = model.order;
    const auto ar = poly::multiply(poly::from_ar(poly::expand_ar(model.ar, model.sar, o.s)),
                                   poly::differencing(o.d, o.D, o.s));
    const auto theta = poly::expand_ma(model.ma, model.sma, o.s);
    std::vector<double> psi(static_cast<std::size_t>(count), 0.0);
    psi[0] = 1.0;
    for (std::size_t j = 1; j < psi.size(); ++j) {
        double v = j <= theta.size() ? theta[j - 1] : 0.0;
        for (std::size_t i = 1; i < ar.size() && i <= j; ++i) {
            v -= ar[i] * psi[j - i];
        }
        psi[j] = v;
    }
    return psi;
}

ForecastResult forecast(const FittedModel& model, int h, std::span<const double> levels) {
    if (h <= 0) {
        throw InvalidArgument(fmt::format("forecast horizon must be positive, got {}", h));
    }
    for (double level : levels) {
        if (!(level > 0.0 && level < 1.0)) {
            throw InvalidArgument(fmt::format("confidence level {} is outside (0, 1)", level));
        }
    }
    const auto& o = model.order;
    const auto& y = model.data;
    const double mu = model.drift.value_or(0.0);

    // Forecast the stationary differenced series, then undo the differencing.
    const auto w = difference_for(y.values(), o);
    Eigen::MatrixXd centred(static_cast<Eigen::Index>(w.size()), 1);
    for (std::size_t t = 0; t < w.size(); ++t) {
        centred(static_cast<Eigen::Index>(t), 0) = w[t] - mu;
    }
    const auto ss = make_arma_state_space(poly::expand_ar(model.ar, model.sar, o.s),
                                          poly::expand_ma(model.ma, model.sma, o.s));
    const auto kf = kalman_filter(ss, centred);
    const auto wf = forecast_state(ss, kf.next_state, h);

    const auto delta = poly::differencing(o.d, o.D, o.s);
    std::vector<double> path(y.values().begin(), y.values().end());
    ForecastResult out;
    out.origin = static_cast<std::ptrdiff_t>(y.size()) - 1;
    out.horizon = h;
    for (int j = 0; j < h; ++j) {
        double v = wf[static_cast<std::size_t>(j)] + mu;
        for (std::size_t i = 1; i < delta.size(); ++i) {
            v -= delta[i] * path[path.size() - i];
        }
        path.push_back(v);
        out.points.push_back(v);
        out.labels.push_back(y.label_at(out.origin + 1 + j));
    }

    const auto psi = psi_weights(model, h);
    double acc = 0;
    for (int j = 0; j < h; ++j) {
        acc += psi[static_cast<std::size_t>(j)] * psi[static_cast<std::size_t>(j)];
        out.std_errors.push_back(std::sqrt(model.sigma2 * acc));
    }

    std::vector<double> sorted(levels.begin(), levels.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (double level : sorted) {
        const double z = normal_quantile(0.5 * (1.0 + level));
        ForecastBand b;
        b.level = level;
        for (int j = 0; j < h; ++j) {
            const double half = z * out.std_errors[static_cast<std::size_t>(j)];
            b.lower.push_back(out.points[static_cast<std::size_t>(j)] - half);
            b.upper.push_back(out.points[static_cast<std::size_t>(j)] + half);
        }
        out.bands.push_back(std::move(b));
    }
    return out;
}

}  // namespace bj
