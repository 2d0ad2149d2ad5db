#include "bj/diagnostics.hpp"

#include "bj/correlation.hpp"
#include "bj/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/special_functions/gamma.hpp>
#include <fmt/format.h>

namespace bj {

double chi_square_sf(double x, double df) {
    if (!(df > 0.0)) {
        throw InvalidArgument("chi-square degrees of freedom must be positive");
    }
    if (x <= 0.0) {
        return 1.0;
    }
    return boost::math::gamma_q(df / 2.0, x / 2.0);
}

int default_ljung_box_lags(std::size_t n, int period, int fitdf) {
    const int cap = static_cast<int>(std::lround(static_cast<double>(n) / 5.0));
    return std::max(std::min(period > 1 ? 2 * period : 10, cap), fitdf + 3);
}

PortmanteauReport ljung_box(std::span<const double> residuals, int lags, int fitdf) {
    if (fitdf < 0) {
        throw InvalidArgument("fitdf must be non-negative");
    }
    if (lags <= fitdf) {
        throw InvalidArgument(fmt::format("Ljung-Box needs lags > fitdf (got lags = {}, fitdf = {})", lags, fitdf));
    }
    const auto n = residuals.size();
    if (n <= static_cast<std::size_t>(lags)) {
        throw InvalidArgument(fmt::format("Ljung-Box needs more than {} observations, got {}", lags, n));
    }
    const auto r = autocorrelations(residuals, lags);
    const double nd = static_cast<double>(n);
    double sum = 0;
    for (int k = 1; k <= lags; ++k) {
        sum += r[static_cast<std::size_t>(k)] * r[static_cast<std::size_t>(k)] / (nd - k);
    }
    PortmanteauReport rep;
    rep.q_stat = nd * (nd + 2.0) * sum;
    rep.lags_used = lags;
    rep.fitdf = fitdf;
    rep.df = lags - fitdf;
    rep.p_value = chi_square_sf(rep.q_stat, rep.df);
    return rep;
}

double kolmogorov_sf(double lambda) {
    // The series is 1 to double precision below 0.2 and converges slowly there.
    if (lambda < 0.2) {
        return 1.0;
    }
    double sum = 0;
    for (int k = 1; k <= 100; ++k) {
        const double term = std::exp(-2.0 * k * k * lambda * lambda);
        sum += (k % 2 == 1 ? term : -term);
        if (term < 1e-17) break;
    }
    return std::clamp(2.0 * sum, 0.0, 1.0);
}

double lilliefors_p_value(double d, std::size_t n) {
    // Dallal and Wilkinson (1986) for small p-values, Stephens (1974) modified
    // statistic above 0.1; samples over 100 are rescaled to n = 100.
    const double nd = static_cast<double>(n);
    double kd = d;
    double m = nd;
    if (n > 100) {
        kd = d * std::pow(nd / 100.0, 0.49);
        m = 100.0;
    }
    double p = std::exp(-7.01256 * kd * kd * (m + 2.78019) + 2.99587 * kd * std::sqrt(m + 2.78019) - 0.122119 +
                        0.974598 / std::sqrt(m) + 1.67997 / m);
    if (p <= 0.1) return p;
    const double k = (std::sqrt(nd) - 0.01 + 0.85 / std::sqrt(nd)) * d;
    if (k <= 0.302) {
        p = 1.0;
    } else if (k <= 0.5) {
        p = 2.76773 - 19.828315 * k + 80.709644 * k * k - 138.55152 * k * k * k + 81.218052 * k * k * k * k;
    } else if (k <= 0.9) {
        p = -4.901232 + 40.662806 * k - 97.490286 * k * k + 94.029866 * k * k * k - 32.355711 * k * k * k * k;
    } else if (k <= 1.31) {
        p = 6.198765 - 19.558097 * k + 23.186922 * k * k - 12.234627 * k * k * k + 2.423045 * k * k * k * k;
    } else {
        p = 0.0;
    }
    return std::clamp(p, 0.0, 1.0);
}

NormalityReport ks_normality(std::span<const double> residuals) {
    const auto n = residuals.size();
    if (n < 5) {
        throw InvalidArgument("KS normality test needs at least 5 observations");
    }
    const double m = mean(residuals);
    double ss = 0;
    for (double v : residuals) ss += (v - m) * (v - m);
    const double sd = std::sqrt(ss / static_cast<double>(n - 1));
    if (!(sd > 0.0)) {
        throw DegenerateSeries("KS normality test on a constant sample");
    }
    std::vector<double> z(residuals.begin(), residuals.end());
    std::sort(z.begin(), z.end());
    const double nd = static_cast<double>(n);
    double d = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double f = normal_cdf((z[i] - m) / sd);
        d = std::max({d, static_cast<double>(i + 1) / nd - f, f - static_cast<double>(i) / nd});
    }
    NormalityReport rep;
    rep.d_stat = d;
    rep.p_value = lilliefors_p_value(d, n);
    const double sn = std::sqrt(nd);
    rep.asymptotic_p_value = kolmogorov_sf((sn + 0.12 + 0.11 / sn) * d);
    return rep;
}

AccuracyReport accuracy(std::span<const double> actual, std::span<const double> predicted,
                        std::span<const double> training, int mase_lag) {
    if (actual.size() != predicted.size()) {
        throw InvalidArgument(fmt::format("accuracy: {} actual values but {} predictions", actual.size(),
                                          predicted.size()));
    }
    if (actual.empty()) {
        throw InvalidArgument("accuracy: no observations");
    }
    if (mase_lag < 1 || training.size() <= static_cast<std::size_t>(mase_lag)) {
        throw InvalidArgument(fmt::format("accuracy: training set of {} values is too short for lag {}",
                                          training.size(), mase_lag));
    }
    const auto n = actual.size();
    const double nd = static_cast<double>(n);
    std::vector<double> e(n);
    AccuracyReport rep;
    double se = 0, ae = 0, pe = 0, ape = 0;
    for (std::size_t t = 0; t < n; ++t) {
        if (actual[t] == 0.0) {
            throw InvalidArgument(fmt::format("accuracy: actual value at index {} is zero, percentage errors undefined", t));
        }
        e[t] = actual[t] - predicted[t];
        rep.me += e[t];
        se += e[t] * e[t];
        ae += std::abs(e[t]);
        pe += e[t] / actual[t];
        ape += std::abs(e[t] / actual[t]);
    }
    rep.me /= nd;
    rep.rmse = std::sqrt(se / nd);
    rep.mae = ae / nd;
    rep.mpe = 100.0 * pe / nd;
    rep.mape = 100.0 * ape / nd;

    double scale = 0;
    const auto lag = static_cast<std::size_t>(mase_lag);
    for (std::size_t t = lag; t < training.size(); ++t) {
        scale += std::abs(training[t] - training[t - lag]);
    }
    scale /= static_cast<double>(training.size() - lag);
    if (!(scale > 0.0)) {
        throw DegenerateSeries("accuracy: naive forecast errors on the training set are all zero");
    }
    rep.mase = rep.mae / scale;

    try {
        rep.acf1 = n > 1 ? autocorrelations(e, 1)[1] : std::numeric_limits<double>::quiet_NaN();
    } catch (const DegenerateSeries&) {
        rep.acf1 = std::numeric_limits<double>::quiet_NaN();
    }
    return rep;
}

AccuracyReport training_accuracy(const FittedModel& model) {
    const auto fitted = model.fitted_values();
    return accuracy(model.data.values(), fitted, model.data.values(), std::max(1, model.data.frequency()));
}

}  // namespace bj
