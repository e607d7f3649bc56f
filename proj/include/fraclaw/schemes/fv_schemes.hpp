#pragma once

#include <vector>

#include "fraclaw/mesh/poly_state.hpp"
#include "fraclaw/schemes/discretization.hpp"

namespace fraclaw {

/// Interface fluxes F_0 .. F_n, F_i = F(u(x_i^-), u(x_i^+)). Outside the
/// window the traces are 0 (zero extension) or wrapped (periodic).
std::vector<double> interface_fluxes(const PolyState& state, const FluxSpec& flux, Boundary boundary);

/// U^{n+1} = U^n - dt D_- F + dt g<U^n>. Requires k = 0.
PolyState step_explicit_fv(const PolyState& state, const Discretization& disc, double dt);

/// h = U^n - dt D_- F, then U^{n+1} solves U^{n+1} - dt g<U^{n+1}> = h.
/// Requires k = 0.
PolyState step_imex_fv(const PolyState& state, const Discretization& disc, double dt);

/// Largest per-cell violation of the discrete cell entropy inequality of the
/// finite-volume schemes for the Kruzkov entropy |u - k|:
///   |U^{n+1}_i - k| - |U^n_i - k| + dt/dx (Q_{i+1} - Q_i)
///     - dt sgn(U^{n+1}_i - k) g<V>_i
/// with Q_i = F(U_{i-1} v k, U_i v k) - F(U_{i-1} ^ k, U_i ^ k) built from U^n,
/// V = U^{n+1} for imex_fv and V = U^n for explicit_fv.
/// Nonpositive up to rounding when `next` is a step of `prev` under the CFL bound.
double entropy_violation(const PolyState& prev, const PolyState& next, const Discretization& disc, double dt,
                         double k);

}  // namespace fraclaw
