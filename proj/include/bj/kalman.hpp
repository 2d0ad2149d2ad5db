#pragma once

#include <Eigen/Dense>

#include <span>
#include <vector>

namespace bj {

/// State-space form of a zero-mean ARMA process
///   x_t = phi_1 x_{t-1} + ... + e_t + theta_1 e_{t-1} + ...
/// with state dimension r = max(p, q + 1), transition T (phi in the first
/// column, identity on the superdiagonal), disturbance loading R = (1, theta)
/// and observation x_t = state[0]. Variances are in units of sigma^2.
struct ArmaStateSpace {
    Eigen::MatrixXd transition;
    Eigen::VectorXd loading;
    /// Stationary covariance of the state, solving P = T P T' + R R'.
    Eigen::MatrixXd initial_covariance;

    [[nodiscard]] Eigen::Index dim() const { return transition.rows(); }
};

/// Throws ComputeError when the AR part is not stationary.
[[nodiscard]] ArmaStateSpace make_arma_state_space(std::span<const double> phi, std::span<const double> theta);

/// Solves P = T P T' + Q by the doubling iteration. Throws ComputeError when
/// the spectral radius of T is not below one.
[[nodiscard]] Eigen::MatrixXd stationary_covariance(const Eigen::MatrixXd& T, const Eigen::MatrixXd& Q);

struct KalmanOutput {
    /// Sum of v_t^2 / F_t for each data column.
    Eigen::VectorXd ssq;
    /// Cross products sum v_t^(i) v_t^(j) / F_t between data columns.
    Eigen::MatrixXd cross;
    double sum_log_f = 0;
    std::size_t n = 0;
    /// Standardised innovations v_t / sqrt(F_t) of the first column (when requested).
    std::vector<double> standardized;
    /// One-step-ahead predicted state and covariance after the last observation,
    /// first column only.
    Eigen::VectorXd next_state;
    Eigen::MatrixXd next_covariance;
};

/// Prediction-error decomposition for one or more data columns sharing the
/// same gain sequence (columns of `data`, each of length n).
[[nodiscard]] KalmanOutput kalman_filter(const ArmaStateSpace& ss, const Eigen::MatrixXd& data,
                                         bool keep_residuals = false);

/// Standardised innovations for the first `count` observations of an ARIMA
/// process with differencing polynomial `delta` (delta[0] == 1), using a
/// diffuse prior (variance kappa) on the pre-sample levels.
[[nodiscard]] std::vector<double> diffuse_leading_residuals(const ArmaStateSpace& ss,
                                                            std::span<const double> delta,
                                                            std::span<const double> y, std::size_t count,
                                                            double kappa = 1e6);

/// Mean forecasts of a zero-mean ARMA process h steps past the filtered sample.
[[nodiscard]] std::vector<double> forecast_state(const ArmaStateSpace& ss, const Eigen::VectorXd& next_state,
                                                 int h);

}  // namespace bj
