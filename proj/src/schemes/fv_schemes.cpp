#include "fraclaw/schemes/fv_schemes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fraclaw/fractional/implicit_solver.hpp"

namespace fraclaw {
namespace {

void require_fv(const PolyState& state, const Discretization& disc, const char* who) {
  if (state.degree() != 0 || disc.degree() != 0) throw std::invalid_argument(std::string(who) + " requires k = 0");
  if (!(state.grid() == disc.grid())) throw std::invalid_argument(std::string(who) + ": state grid differs");
}

// h = U - dt/dx (F_{i+1} - F_i).
PolyState convective_update(const PolyState& state, const Discretization& disc, double dt) {
  const auto F = interface_fluxes(state, disc.flux(), disc.boundary());
  PolyState h = state;
  const double r = dt / disc.grid().dx();
  for (std::size_t i = 0; i < state.n_cells(); ++i) h(0, i) -= r * (F[i + 1] - F[i]);
  return h;
}

}  // namespace

std::vector<double> interface_fluxes(const PolyState& state, const FluxSpec& flux, Boundary boundary) {
  const std::size_t n = state.n_cells();
  std::vector<double> F(n + 1);
  for (std::size_t i = 1; i < n; ++i) F[i] = evaluate(flux, state.right_trace(i - 1), state.left_trace(i));
  if (boundary == Boundary::periodic) {
    F[0] = F[n] = evaluate(flux, state.right_trace(n - 1), state.left_trace(0));
  } else {
    F[0] = evaluate(flux, 0.0, state.left_trace(0));
    F[n] = evaluate(flux, state.right_trace(n - 1), 0.0);
  }
  return F;
}

PolyState step_explicit_fv(const PolyState& state, const Discretization& disc, double dt) {
  require_fv(state, disc, "step_explicit_fv");
  PolyState next = convective_update(state, disc, dt);
  PolyState g(state.grid(), 0);
  disc.nonlocal_term(state, g);
  next.axpy(dt, g);
  next.check_finite("explicit finite-volume step");
  return next;
}

PolyState step_imex_fv(const PolyState& state, const Discretization& disc, double dt) {
  require_fv(state, disc, "step_imex_fv");
  const PolyState h = convective_update(state, disc, dt);
  h.check_finite("convective predictor");
  auto v = solve_implicit(disc.fractional(), dt, h.averages(), disc.config().implicit);
  PolyState next(state.grid(), 0, std::move(v));
  next.check_finite("implicit-explicit step");
  return next;
}

double entropy_violation(const PolyState& prev, const PolyState& next, const Discretization& disc, double dt,
                         double k) {
  require_fv(prev, disc, "entropy_violation");
  require_fv(next, disc, "entropy_violation");
  const std::size_t n = prev.n_cells();
  const bool periodic = disc.boundary() == Boundary::periodic;
  auto u = [&](std::ptrdiff_t i) -> double {
    const auto nn = static_cast<std::ptrdiff_t>(n);
    if (i < 0 || i >= nn) {
      if (!periodic) return 0.0;
      i = ((i % nn) + nn) % nn;
    }
    return prev(0, static_cast<std::size_t>(i));
  };
  auto Q = [&](std::ptrdiff_t i) {  // interface between cells i-1 and i
    const double a = u(i - 1);
    const double b = u(i);
    return evaluate(disc.flux(), std::max(a, k), std::max(b, k)) - evaluate(disc.flux(), std::min(a, k), std::min(b, k));
  };
  // The nonlocal term sits at the level the scheme treats it: new for IMEX, old for explicit.
  PolyState g(next.grid(), 0);
  disc.nonlocal_term(disc.config().kind == SchemeKind::explicit_fv ? prev : next, g);
  const double r = dt / disc.grid().dx();
  double worst = -INFINITY;
  for (std::size_t i = 0; i < n; ++i) {
    const auto ii = static_cast<std::ptrdiff_t>(i);
    const double un = next(0, i);
    const double sgn = un > k ? 1.0 : (un < k ? -1.0 : 0.0);
    const double lhs = std::abs(un - k) - std::abs(prev(0, i) - k) + r * (Q(ii + 1) - Q(ii)) - dt * sgn * g(0, i);
    worst = std::max(worst, lhs);
  }
  return worst;
}

}  // namespace fraclaw
