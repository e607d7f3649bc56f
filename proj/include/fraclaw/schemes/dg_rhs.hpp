#pragma once

#include "fraclaw/mesh/poly_state.hpp"
#include "fraclaw/schemes/discretization.hpp"

namespace fraclaw {

/// Semidiscrete DG right-hand side
///   dU_{q,i}/dt = (2q+1)/dx [ int_{I_i} f(u) phi_q' + (-1)^q F_i - F_{i+1} + int_{I_i} g[u] phi_q ].
/// The volume term uses k + 2 Gauss points per cell. Throws
/// std::invalid_argument when the state degree differs from the discretization.
PolyState dg_rhs(const PolyState& state, const Discretization& disc);

/// Shu-Osher SSP-RK3 step; with k >= 1 and limiting enabled the TVB limiter
/// is applied after every stage.
PolyState step_rk3(const PolyState& state, const Discretization& disc, double dt);

/// U + dt L(U). Only offered for k = 0, where it coincides with the explicit
/// finite-volume scheme.
PolyState step_forward_euler(const PolyState& state, const Discretization& disc, double dt);

}  // namespace fraclaw
