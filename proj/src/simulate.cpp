#include "bj/error.hpp"
#include "bj/estimation.hpp"
#include "bj/polynomial.hpp"

#include <cmath>
#include <random>

#include <fmt/format.h>

namespace bj {

TimeSeries simulate(const ModelOrder& order, std::span<const double> coefficients, double sigma2, std::size_t n,
                    std::uint64_t seed) {
    order.validate(1000);
    if (n == 0) {
        throw InvalidArgument("simulate: n must be positive");
    }
    if (!(sigma2 > 0.0) || !std::isfinite(sigma2)) {
        throw InvalidArgument("simulate: sigma2 must be positive and finite");
    }
    const auto ncoef = static_cast<std::size_t>(order.coefficient_count());
    if (coefficients.size() != ncoef) {
        throw InvalidArgument(fmt::format("simulate: expected {} coefficients for {}, got {}", ncoef,
                                          order.to_string(), coefficients.size()));
    }
    std::size_t at = 0;
    auto take = [&](int count) {
        std::vector<double> v(coefficients.begin() + static_cast<std::ptrdiff_t>(at),
                              coefficients.begin() + static_cast<std::ptrdiff_t>(at) + count);
        at += static_cast<std::size_t>(count);
        return v;
    };
    const auto ar = take(order.p);
    const auto ma = take(order.q);
    const auto sar = take(order.P);
    const auto sma = take(order.Q);
    const double mu = order.drift ? coefficients[at] : 0.0;

    const auto phi = poly::expand_ar(ar, sar, order.s);
    const auto theta = poly::expand_ma(ma, sma, order.s);
    if (poly::min_root_modulus(poly::from_ar(phi)) <= 1.0) {
        throw InvalidArgument("simulate: AR coefficients are not stationary");
    }
    if (poly::min_root_modulus(poly::from_ma(theta)) <= 1.0) {
        throw InvalidArgument("simulate: MA coefficients are not invertible");
    }

    const std::size_t burn = 10 * (phi.size() + theta.size() + 1);
    const std::size_t total = burn + n;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, std::sqrt(sigma2));

    std::vector<double> e(total);
    std::vector<double> x(total, 0.0);
    for (std::size_t t = 0; t < total; ++t) {
        e[t] = normal(rng);
        double v = e[t];
        for (std::size_t i = 0; i < phi.size() && i < t; ++i) {
            v += phi[i] * x[t - i - 1];
        }
        for (std::size_t j = 0; j < theta.size() && j < t; ++j) {
            v += theta[j] * e[t - j - 1];
        }
        x[t] = v;
    }

    // Levels with zero pre-sample values: delta(B) y_t = w_t.
    const auto delta = poly::differencing(order.d, order.D, order.s);
    std::vector<double> y(n);
    for (std::size_t t = 0; t < n; ++t) {
        double v = x[burn + t] + mu;
        for (std::size_t i = 1; i < delta.size() && i <= t; ++i) {
            v -= delta[i] * y[t - i];
        }
        y[t] = v;
    }
    return TimeSeries(std::move(y));
}

}  // namespace bj
