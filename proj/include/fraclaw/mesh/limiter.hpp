#pragma once

#include "fraclaw/mesh/grid.hpp"
#include "fraclaw/mesh/poly_state.hpp"

namespace fraclaw {

/// minmod(a, b, c): the argument of smallest magnitude if all share a sign, else 0.
double minmod(double a, double b, double c) noexcept;

/// TVB-modified minmod: returns a unchanged when |a| <= threshold.
double tvb_minmod(double a, double b, double c, double threshold) noexcept;

/// TVB slope limiter on the Legendre slope coefficient U_1.
///
/// The slope is replaced by tvb_minmod(U_1, forward difference of averages,
/// backward difference of averages) with threshold m_param * dx^2. In cells
/// where the slope changes, U_2 is set to zero. Cell averages are never
/// modified. Neighbour averages outside the window come from `boundary`.
/// Requires degree >= 1.
PolyState tvb_limit(const PolyState& state, double m_param, Boundary boundary = Boundary::zero_extension);
void tvb_limit_in_place(PolyState& state, double m_param, Boundary boundary = Boundary::zero_extension);

}  // namespace fraclaw
