#include "bj/kalman.hpp"

#include "bj/error.hpp"

#include <algorithm>
#include <cmath>

namespace bj {

Eigen::MatrixXd stationary_covariance(const Eigen::MatrixXd& T, const Eigen::MatrixXd& Q) {
    // P = sum_k T^k Q T'^k, summed 2^i terms at a time.
    Eigen::MatrixXd P = Q;
    Eigen::MatrixXd A = T;
    for (int iter = 0; iter < 80; ++iter) {
        const double a_norm = A.cwiseAbs().maxCoeff();
        if (!std::isfinite(a_norm) || a_norm > 1e150) {
            break;
        }
        if (a_norm < 1e-17) {
            return P;
        }
        P += A * P * A.transpose();
        A = A * A;
        if (!P.allFinite()) {
            break;
        }
    }
    throw ComputeError("state transition is not stable; no stationary covariance exists");
}

ArmaStateSpace make_arma_state_space(std::span<const double> phi, std::span<const double> theta) {
    const auto p = static_cast<Eigen::Index>(phi.size());
    const auto q = static_cast<Eigen::Index>(theta.size());
    const Eigen::Index r = std::max<Eigen::Index>(p, q + 1);
    ArmaStateSpace ss;
    ss.transition = Eigen::MatrixXd::Zero(r, r);
    for (Eigen::Index i = 0; i < p; ++i) {
        ss.transition(i, 0) = phi[static_cast<std::size_t>(i)];
    }
    for (Eigen::Index i = 0; i + 1 < r; ++i) {
        ss.transition(i, i + 1) = 1.0;
    }
    ss.loading = Eigen::VectorXd::Zero(r);
    ss.loading(0) = 1.0;
    for (Eigen::Index j = 0; j < q; ++j) {
        ss.loading(j + 1) = theta[static_cast<std::size_t>(j)];
    }
    ss.initial_covariance = stationary_covariance(ss.transition, ss.loading * ss.loading.transpose());
    return ss;
}

KalmanOutput kalman_filter(const ArmaStateSpace& ss, const Eigen::MatrixXd& data, bool keep_residuals) {
    const Eigen::Index r = ss.dim();
    const Eigen::Index n = data.rows();
    const Eigen::Index m = data.cols();
    const Eigen::MatrixXd& T = ss.transition;
    const Eigen::MatrixXd RRt = ss.loading * ss.loading.transpose();

    KalmanOutput out;
    out.ssq = Eigen::VectorXd::Zero(m);
    out.cross = Eigen::MatrixXd::Zero(m, m);
    out.n = static_cast<std::size_t>(n);
    if (keep_residuals) {
        out.standardized.reserve(static_cast<std::size_t>(n));
    }

    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(r, m);  // predicted states, one column per series
    Eigen::MatrixXd P = ss.initial_covariance;
    Eigen::VectorXd v(m);
    for (Eigen::Index t = 0; t < n; ++t) {
        const double F = P(0, 0);
        if (!(F > 0.0) || !std::isfinite(F)) {
            throw ComputeError("Kalman filter produced a non-positive innovation variance");
        }
        v = data.row(t).transpose() - a.row(0).transpose();
        out.sum_log_f += std::log(F);
        out.cross.noalias() += v * v.transpose() / F;
        if (keep_residuals) {
            out.standardized.push_back(v(0) / std::sqrt(F));
        }
        const Eigen::VectorXd K = P.col(0) / F;
        a.noalias() += K * v.transpose();
        const Eigen::RowVectorXd prow = P.row(0);
        P.noalias() -= K * prow;
        a = T * a;
        P = T * P * T.transpose() + RRt;
    }
    out.ssq = out.cross.diagonal();
    out.next_state = a.col(0);
    out.next_covariance = P;
    return out;
}

std::vector<double> diffuse_leading_residuals(const ArmaStateSpace& ss, std::span<const double> delta,
                                              std::span<const double> y, std::size_t count, double kappa) {
    const Eigen::Index r = ss.dim();
    const auto nd = static_cast<Eigen::Index>(delta.size()) - 1;
    if (nd <= 0 || count == 0) {
        return {};
    }
    const Eigen::Index dim = r + nd;
    // State: ARMA block followed by (y_{t-1}, ..., y_{t-nd}).
    Eigen::RowVectorXd Z = Eigen::RowVectorXd::Zero(dim);
    Z(0) = 1.0;
    for (Eigen::Index i = 0; i < nd; ++i) {
        Z(r + i) = -delta[static_cast<std::size_t>(i) + 1];
    }
    Eigen::MatrixXd T = Eigen::MatrixXd::Zero(dim, dim);
    T.topLeftCorner(r, r) = ss.transition;
    T.row(r) = Z;
    for (Eigen::Index i = 1; i < nd; ++i) {
        T(r + i, r + i - 1) = 1.0;
    }
    Eigen::VectorXd R = Eigen::VectorXd::Zero(dim);
    R.head(r) = ss.loading;
    const Eigen::MatrixXd RRt = R * R.transpose();

    Eigen::VectorXd a = Eigen::VectorXd::Zero(dim);
    Eigen::MatrixXd P = Eigen::MatrixXd::Zero(dim, dim);
    P.topLeftCorner(r, r) = ss.initial_covariance;
    P.bottomRightCorner(nd, nd) = kappa * Eigen::MatrixXd::Identity(nd, nd);

    std::vector<double> out;
    const std::size_t steps = std::min(count, y.size());
    for (std::size_t t = 0; t < steps; ++t) {
        const Eigen::VectorXd PZ = P * Z.transpose();
        const double F = Z.dot(PZ);
        const double v = y[t] - Z.dot(a);
        out.push_back(v / std::sqrt(F));
        const Eigen::VectorXd K = PZ / F;
        a += K * v;
        P -= K * PZ.transpose();
        a = T * a;
        P = T * P * T.transpose() + RRt;
    }
    return out;
}

std::vector<double> forecast_state(const ArmaStateSpace& ss, const Eigen::VectorXd& next_state, int h) {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(std::max(h, 0)));
    Eigen::VectorXd a = next_state;
    for (int i = 0; i < h; ++i) {
        out.push_back(a(0));
        a = ss.transition * a;
    }
    return out;
}

}  // namespace bj
