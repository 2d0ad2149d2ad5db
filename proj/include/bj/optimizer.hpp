#pragma once

#include <functional>
#include <span>
#include <vector>

namespace bj {

using Objective = std::function<double(std::span<const double>)>;

struct BfgsOptions {
    int max_iterations = 500;
    /// Stop when the decrease falls below reltol * (|f| + reltol).
    double reltol = 1e-8;
    /// Central-difference step for the numeric gradient.
    double gradient_step = 1e-5;
};

struct BfgsResult {
    std::vector<double> x;
    double value = 0;
    int iterations = 0;
    int evaluations = 0;
    bool converged = false;
};

/// Variable-metric minimiser with numeric gradients and backtracking line
/// search. Non-finite objective values are treated as rejected steps.
[[nodiscard]] BfgsResult minimize_bfgs(const Objective& f, std::vector<double> x0, const BfgsOptions& opts = {});

/// Central-difference gradient.
[[nodiscard]] std::vector<double> numeric_gradient(const Objective& f, std::span<const double> x, double step);

/// Central-difference Hessian with per-coordinate steps. Entries are NaN when
/// an evaluation is not finite.
[[nodiscard]] std::vector<std::vector<double>> numeric_hessian(const Objective& f, std::span<const double> x,
                                                               std::span<const double> steps);

}  // namespace bj
