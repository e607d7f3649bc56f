#pragma once

namespace fraclaw {

/// Highest supported polynomial degree of the DG basis.
inline constexpr int kMaxDegree = 2;

/// Legendre polynomial P_p at reference coordinate xi in [-1, 1], 0 <= p <= kMaxDegree.
/// P_p(1) = 1 and P_p(-1) = (-1)^p. Throws std::invalid_argument for other p.
double legendre_eval(int p, double xi);

/// dP_p/dxi.
double legendre_derivative(int p, double xi);

/// Squared L2 norm of P_p on [-1, 1]: 2 / (2p + 1).
constexpr double legendre_norm_sq(int p) noexcept { return 2.0 / (2.0 * p + 1.0); }

}  // namespace fraclaw
