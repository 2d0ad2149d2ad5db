#pragma once

#include <span>
#include <vector>

namespace bj::poly {

// Polynomials are coefficient vectors in ascending powers of B: c[0] + c[1] B + ...

[[nodiscard]] std::vector<double> multiply(std::span<const double> a, std::span<const double> b);

/// Coefficients of (1 - B)^d (1 - B^s)^D.
[[nodiscard]] std::vector<double> differencing(int d, int D, int s);

/// Smallest modulus among the roots of c[0] + c[1] z + ... ; +infinity for a constant.
[[nodiscard]] double min_root_modulus(std::span<const double> c);

/// 1 - a_1 B - ... - a_p B^p.
[[nodiscard]] std::vector<double> from_ar(std::span<const double> ar);

/// 1 + m_1 B + ... + m_q B^q.
[[nodiscard]] std::vector<double> from_ma(std::span<const double> ma);

/// Multiplies the regular and seasonal AR factors and returns the expanded
/// coefficients phi with (1 - sum phi_i B^i) = (1 - sum ar_i B^i)(1 - sum sar_j B^{sj}).
[[nodiscard]] std::vector<double> expand_ar(std::span<const double> ar, std::span<const double> sar, int s);

/// Same for MA: (1 + sum theta_i B^i) = (1 + sum ma_i B^i)(1 + sum sma_j B^{sj}).
[[nodiscard]] std::vector<double> expand_ma(std::span<const double> ma, std::span<const double> sma, int s);

/// Maps unconstrained reals to the coefficients of a stationary AR polynomial:
/// tanh gives partial autocorrelations in (-1, 1), Durbin-Levinson turns them
/// into coefficients.
[[nodiscard]] std::vector<double> unconstrained_to_ar(std::span<const double> u);

/// Inverse of unconstrained_to_ar. Coefficients must describe a stationary AR
/// polynomial; partial autocorrelations are clipped to |r| <= 1 - 1e-8.
[[nodiscard]] std::vector<double> ar_to_unconstrained(std::span<const double> ar);

}  // namespace bj::poly
