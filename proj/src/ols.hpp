#pragma once

#include <Eigen/Dense>

namespace bj::detail {

struct OlsFit {
    Eigen::VectorXd coef;
    Eigen::VectorXd std_errors;
    Eigen::VectorXd residuals;
    double sigma2 = 0;  // residual variance with n - k degrees of freedom
};

/// Least squares of y on the columns of X. Throws SingularDesign when X is
/// rank deficient or has no residual degrees of freedom.
OlsFit ols(const Eigen::MatrixXd& X, const Eigen::VectorXd& y);

}  // namespace bj::detail
