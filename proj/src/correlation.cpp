#include "bj/correlation.hpp"

#include "bj/error.hpp"

#include <cmath>
#include <limits>

#include <fmt/format.h>

namespace bj {

std::vector<double> autocorrelations(std::span<const double> x, int max_lag) {
    const auto n = x.size();
    if (max_lag < 0 || static_cast<std::size_t>(max_lag) >= n) {
        throw InvalidArgument(fmt::format("max_lag {} must lie in [0, {})", max_lag, n));
    }
    const double mu = mean(x);
    double denom = 0;
    for (double v : x) {
        denom += (v - mu) * (v - mu);
    }
    if (denom == 0.0) {
        throw DegenerateSeries("autocorrelation of a constant series is undefined");
    }
    std::vector<double> r(static_cast<std::size_t>(max_lag) + 1);
    r[0] = 1.0;
    for (std::size_t k = 1; k < r.size(); ++k) {
        double num = 0;
        for (std::size_t t = 0; t + k < n; ++t) {
            num += (x[t] - mu) * (x[t + k] - mu);
        }
        r[k] = num / denom;
    }
    return r;
}

std::vector<CorrelogramRow> acf(std::span<const double> x, int max_lag) {
    if (max_lag < 1) {
        throw InvalidArgument("acf: max_lag must be >= 1");
    }
    const auto r = autocorrelations(x, max_lag);
    std::vector<CorrelogramRow> rows;
    rows.reserve(r.size());
    for (std::size_t k = 0; k < r.size(); ++k) {
        rows.push_back({static_cast<int>(k), r[k]});
    }
    return rows;
}

std::vector<double> durbin_levinson(std::span<const double> rho) {
    if (rho.size() < 2) {
        return {};
    }
    const std::size_t K = rho.size() - 1;
    std::vector<double> out(K);
    std::vector<double> phi(K + 1, 0.0);
    std::vector<double> prev(K + 1, 0.0);
    double v = 1.0;
    for (std::size_t k = 1; k <= K; ++k) {
        double num = rho[k];
        for (std::size_t j = 1; j < k; ++j) {
            num -= prev[j] * rho[k - j];
        }
        const double a = num / v;
        phi[k] = a;
        for (std::size_t j = 1; j < k; ++j) {
            phi[j] = prev[j] - a * prev[k - j];
        }
        v *= (1.0 - a * a);
        out[k - 1] = a;
        prev = phi;
    }
    return out;
}

std::vector<CorrelogramRow> pacf(std::span<const double> x, int max_lag) {
    if (max_lag < 1) {
        throw InvalidArgument("pacf: max_lag must be >= 1");
    }
    const auto r = autocorrelations(x, max_lag);
    const auto p = durbin_levinson(r);
    std::vector<CorrelogramRow> rows;
    rows.reserve(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) {
        rows.push_back({static_cast<int>(k) + 1, p[k]});
    }
    return rows;
}

double significance_bound(int n, double level) {
    if (n < 2) {
        throw InvalidArgument("significance_bound: n must be >= 2");
    }
    if (!(level > 0.0 && level < 1.0)) {
        throw InvalidArgument("significance_bound: level must lie in (0, 1)");
    }
    return normal_quantile(0.5 * (1.0 + level)) / std::sqrt(static_cast<double>(n));
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

// Wichura, M. J. (1988) Algorithm AS 241: The percentage points of the
// normal distribution. Applied Statistics 37, 477-484.
double normal_quantile(double p) {
    if (p <= 0.0) {
        return -std::numeric_limits<double>::infinity();
    }
    if (p >= 1.0) {
        return std::numeric_limits<double>::infinity();
    }
    const double q = p - 0.5;
    if (std::fabs(q) <= 0.425) {
        const double r = 0.180625 - q * q;
        return q *
               (((((((r * 2509.0809287301226727 + 33430.575583588128105) * r + 67265.770927008700853) * r +
                    45921.953931549871457) * r + 13731.693765509461125) * r + 1971.5909503065514427) * r +
                 133.14166789178437745) * r + 3.387132872796366608) /
               (((((((r * 5226.495278852545925 + 28729.085735721942674) * r + 39307.89580009271061) * r +
                    21213.794301586595867) * r + 5394.1960214247511077) * r + 687.1870074920579083) * r +
                 42.313330701600911252) * r + 1.0);
    }
    double r = q < 0 ? p : 1.0 - p;
    r = std::sqrt(-std::log(r));
    double val;
    if (r <= 5.0) {
        r -= 1.6;
        val = (((((((r * 7.7454501427834140764e-4 + 0.0227238449892691845833) * r + 0.24178072517745061177) * r +
                   1.27045825245236838258) * r + 3.64784832476320460504) * r + 5.7694972214606914055) * r +
                4.6303378461565452959) * r + 1.42343711074968357734) /
              (((((((r * 1.05075007164441684324e-9 + 5.475938084995344946e-4) * r + 0.0151986665636164571966) * r +
                   0.14810397642748007459) * r + 0.68976733498510000455) * r + 1.6763848301838038494) * r +
                2.05319162663775882187) * r + 1.0);
    } else {
        r -= 5.0;
        val = (((((((r * 2.01033439929228813265e-7 + 2.71155556874348757815e-5) * r + 0.0012426609473880784386) * r +
                   0.026532189526576123093) * r + 0.29656057182850489123) * r + 1.7848265399172913358) * r +
                5.4637849111641143699) * r + 6.6579046435011037772) /
              (((((((r * 2.04426310338993978564e-15 + 1.4215117583164458887e-7) * r + 1.8463183175100546818e-5) * r +
                   7.868691311456132591e-4) * r + 0.0148753612908506148525) * r + 0.13692988092273580531) * r +
                0.59983220655588793769) * r + 1.0);
    }
    return q < 0.0 ? -val : val;
}

}  // namespace bj
