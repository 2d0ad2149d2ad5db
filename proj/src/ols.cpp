#include "ols.hpp"

#include "bj/error.hpp"

#include <fmt/format.h>

namespace bj::detail {

OlsFit ols(const Eigen::MatrixXd& X, const Eigen::VectorXd& y) {
    const auto n = X.rows();
    const auto k = X.cols();
    if (n <= k) {
        throw SingularDesign(fmt::format("regression has {} rows for {} regressors", n, k));
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(X);
    if (qr.rank() < k) {
        throw SingularDesign("regression design matrix is rank deficient");
    }
    OlsFit fit;
    fit.coef = qr.solve(y);
    fit.residuals = y - X * fit.coef;
    fit.sigma2 = fit.residuals.squaredNorm() / static_cast<double>(n - k);
    const Eigen::MatrixXd xtx_inv = (X.transpose() * X).inverse();
    fit.std_errors = (fit.sigma2 * xtx_inv.diagonal().array()).sqrt();
    return fit;
}

}  // namespace bj::detail
