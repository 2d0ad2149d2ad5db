#include "bj/optimizer.hpp"

#include <cmath>
#include <limits>

namespace bj {

std::vector<double> numeric_gradient(const Objective& f, std::span<const double> x, double step) {
    std::vector<double> g(x.size());
    std::vector<double> xp(x.begin(), x.end());
    for (std::size_t i = 0; i < x.size(); ++i) {
        xp[i] = x[i] + step;
        const double fp = f(xp);
        xp[i] = x[i] - step;
        const double fm = f(xp);
        xp[i] = x[i];
        g[i] = (fp - fm) / (2.0 * step);
    }
    return g;
}

std::vector<std::vector<double>> numeric_hessian(const Objective& f, std::span<const double> x,
                                                 std::span<const double> steps) {
    const auto n = x.size();
    std::vector<std::vector<double>> H(n, std::vector<double>(n, 0.0));
    std::vector<double> xp(x.begin(), x.end());
    auto eval = [&](std::size_t i, double di, std::size_t j, double dj) {
        xp[i] += di;
        xp[j] += dj;
        const double v = f(xp);
        xp[i] = x[i];
        xp[j] = x[j];
        return v;
    };
    const double f0 = f(xp);
    for (std::size_t i = 0; i < n; ++i) {
        const double hi = steps[i];
        const double fp = eval(i, hi, i, 0.0);
        const double fm = eval(i, -hi, i, 0.0);
        H[i][i] = (fp - 2.0 * f0 + fm) / (hi * hi);
        for (std::size_t j = i + 1; j < n; ++j) {
            const double hj = steps[j];
            const double fpp = eval(i, hi, j, hj);
            const double fpm = eval(i, hi, j, -hj);
            const double fmp = eval(i, -hi, j, hj);
            const double fmm = eval(i, -hi, j, -hj);
            H[i][j] = H[j][i] = (fpp - fpm - fmp + fmm) / (4.0 * hi * hj);
        }
    }
    for (auto& row : H) {
        for (double& v : row) {
            if (!std::isfinite(v)) {
                v = std::numeric_limits<double>::quiet_NaN();
            }
        }
    }
    return H;
}

// Follows the structure of Nash's variable metric algorithm (Compact
// Numerical Methods, Algorithm 21): inverse-Hessian BFGS updates, backtracking
// by a factor 0.2, reset to steepest descent when the direction is not downhill.
BfgsResult minimize_bfgs(const Objective& f, std::vector<double> x0, const BfgsOptions& opts) {
    constexpr double kStepShrink = 0.2;
    constexpr double kAcceptTol = 1e-4;
    constexpr double kRelTest = 10.0;

    const auto n = x0.size();
    BfgsResult res;
    res.x = std::move(x0);
    res.value = f(res.x);
    res.evaluations = 1;
    if (n == 0) {
        res.converged = std::isfinite(res.value);
        return res;
    }
    if (!std::isfinite(res.value)) {
        return res;
    }

    auto gradient = [&](std::span<const double> x) {
        res.evaluations += static_cast<int>(2 * n);
        return numeric_gradient(f, x, opts.gradient_step);
    };

    std::vector<double> g = gradient(res.x);
    std::vector<std::vector<double>> B(n, std::vector<double>(n, 0.0));
    std::vector<double> t(n), xnew(n), c(n), gnew(n), X(n);
    int ilast = 0;
    int iter = 0;
    bool reset = true;

    while (iter < opts.max_iterations) {
        ++iter;
        if (reset) {
            for (std::size_t i = 0; i < n; ++i) {
                std::fill(B[i].begin(), B[i].end(), 0.0);
                B[i][i] = 1.0;
            }
            ilast = iter;
            reset = false;
        }
        double gradproj = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                s -= B[i][j] * g[j];
            }
            t[i] = s;
            gradproj += s * g[i];
        }

        if (gradproj < 0.0) {
            double steplength = 1.0;
            bool accepted = false;
            bool moved = true;
            double fnew = res.value;
            while (moved) {
                int count = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    xnew[i] = res.x[i] + steplength * t[i];
                    if (kRelTest + res.x[i] == kRelTest + xnew[i]) {
                        ++count;
                    }
                }
                if (count == static_cast<int>(n)) {
                    moved = false;
                    break;
                }
                fnew = f(xnew);
                ++res.evaluations;
                if (std::isfinite(fnew) && fnew <= res.value + gradproj * steplength * kAcceptTol) {
                    accepted = true;
                    break;
                }
                steplength *= kStepShrink;
            }
            const bool enough = accepted && std::fabs(fnew - res.value) >
                                                opts.reltol * (std::fabs(res.value) + opts.reltol);
            if (!enough) {
                if (accepted) {
                    res.x = xnew;
                    res.value = fnew;
                }
                if (ilast == iter) {
                    res.converged = true;
                    break;
                }
                reset = true;
                continue;
            }
            X = res.x;
            res.x = xnew;
            res.value = fnew;
            gnew = gradient(res.x);
            double D1 = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                t[i] = res.x[i] - X[i];
                c[i] = gnew[i] - g[i];
                D1 += t[i] * c[i];
            }
            g = gnew;
            if (D1 > 0.0) {
                double D2 = 0.0;
                for (std::size_t i = 0; i < n; ++i) {
                    double s = 0.0;
                    for (std::size_t j = 0; j < n; ++j) {
                        s += B[i][j] * c[j];
                    }
                    X[i] = s;
                    D2 += s * c[i];
                }
                D2 = 1.0 + D2 / D1;
                for (std::size_t i = 0; i < n; ++i) {
                    for (std::size_t j = 0; j < n; ++j) {
                        B[i][j] += (D2 * t[i] * t[j] - X[i] * t[j] - t[i] * X[j]) / D1;
                    }
                }
            } else {
                reset = true;
            }
        } else {
            if (ilast == iter) {
                res.converged = true;
                break;
            }
            reset = true;
        }
    }
    res.iterations = iter;
    return res;
}

}  // namespace bj
