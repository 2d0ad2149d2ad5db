#include "bj/polynomial.hpp"

#include "bj/error.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>

namespace bj::poly {

std::vector<double> multiply(std::span<const double> a, std::span<const double> b) {
    if (a.empty() || b.empty()) {
        return {};
    }
    std::vector<double> out(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

std::vector<double> differencing(int d, int D, int s) {
    std::vector<double> out{1.0};
    const std::vector<double> first{1.0, -1.0};
    for (int i = 0; i < d; ++i) {
        out = multiply(out, first);
    }
    std::vector<double> seasonal(static_cast<std::size_t>(s) + 1, 0.0);
    seasonal.front() = 1.0;
    seasonal.back() = -1.0;
    for (int i = 0; i < D; ++i) {
        out = multiply(out, seasonal);
    }
    return out;
}

double min_root_modulus(std::span<const double> c) {
    std::size_t deg = c.size();
    while (deg > 0 && std::fabs(c[deg - 1]) <= 1e-12) {
        --deg;
    }
    if (deg <= 1) {
        return std::numeric_limits<double>::infinity();
    }
    const auto m = static_cast<Eigen::Index>(deg - 1);
    // Companion matrix of the monic polynomial.
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(m, m);
    const double lead = c[deg - 1];
    for (Eigen::Index j = 0; j < m; ++j) {
        comp(0, j) = -c[deg - 2 - static_cast<std::size_t>(j)] / lead;
    }
    for (Eigen::Index i = 1; i < m; ++i) {
        comp(i, i - 1) = 1.0;
    }
    Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
    double best = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < m; ++i) {
        best = std::min(best, std::abs(es.eigenvalues()(i)));
    }
    return best;
}

std::vector<double> from_ar(std::span<const double> ar) {
    std::vector<double> out{1.0};
    for (double a : ar) {
        out.push_back(-a);
    }
    return out;
}

std::vector<double> from_ma(std::span<const double> ma) {
    std::vector<double> out{1.0};
    out.insert(out.end(), ma.begin(), ma.end());
    return out;
}

namespace {

std::vector<double> seasonal_poly(std::span<const double> coefs, int s, double sign) {
    std::vector<double> out(coefs.size() * static_cast<std::size_t>(s) + 1, 0.0);
    out[0] = 1.0;
    for (std::size_t j = 0; j < coefs.size(); ++j) {
        out[(j + 1) * static_cast<std::size_t>(s)] = sign * coefs[j];
    }
    return out;
}

}  // namespace

std::vector<double> expand_ar(std::span<const double> ar, std::span<const double> sar, int s) {
    const auto prod = multiply(from_ar(ar), seasonal_poly(sar, s, -1.0));
    std::vector<double> phi(prod.size() - 1);
    for (std::size_t i = 1; i < prod.size(); ++i) {
        phi[i - 1] = -prod[i];
    }
    return phi;
}

std::vector<double> expand_ma(std::span<const double> ma, std::span<const double> sma, int s) {
    const auto prod = multiply(from_ma(ma), seasonal_poly(sma, s, 1.0));
    return {prod.begin() + 1, prod.end()};
}

std::vector<double> unconstrained_to_ar(std::span<const double> u) {
    const auto p = u.size();
    std::vector<double> phi(p), prev(p);
    for (std::size_t k = 0; k < p; ++k) {
        const double r = std::tanh(u[k]);
        phi[k] = r;
        for (std::size_t j = 0; j < k; ++j) {
            phi[j] = prev[j] - r * prev[k - 1 - j];
        }
        prev = phi;
    }
    return phi;
}

std::vector<double> ar_to_unconstrained(std::span<const double> ar) {
    const auto p = ar.size();
    std::vector<double> phi(ar.begin(), ar.end());
    std::vector<double> u(p);
    constexpr double kLimit = 1.0 - 1e-8;
    for (std::size_t k = p; k-- > 0;) {
        double r = phi[k];
        if (!(std::fabs(r) < 1.0)) {
            throw InvalidArgument("ar_to_unconstrained: polynomial is not stationary");
        }
        r = std::clamp(r, -kLimit, kLimit);
        u[k] = std::atanh(r);
        const double denom = 1.0 - r * r;
        std::vector<double> lower(k);
        for (std::size_t j = 0; j < k; ++j) {
            lower[j] = (phi[j] + r * phi[k - 1 - j]) / denom;
        }
        std::copy(lower.begin(), lower.end(), phi.begin());
    }
    return u;
}

}  // namespace bj::poly
