#include "fraclaw/schemes/dg_rhs.hpp"

#include <stdexcept>

#include "fraclaw/mesh/legendre.hpp"
#include "fraclaw/mesh/limiter.hpp"
#include "fraclaw/mesh/quadrature.hpp"
#include "fraclaw/schemes/fv_schemes.hpp"

namespace fraclaw {

PolyState dg_rhs(const PolyState& state, const Discretization& disc) {
  const int k = disc.degree();
  if (state.degree() != k) throw std::invalid_argument("dg_rhs: state degree differs from the discretization");
  if (!(state.grid() == disc.grid())) throw std::invalid_argument("dg_rhs: state grid differs");
  const std::size_t n = state.n_cells();

  PolyState out(state.grid(), k);
  disc.nonlocal_term(state, out);

  const auto F = interface_fluxes(state, disc.flux(), disc.boundary());
  const double inv_dx = 1.0 / disc.grid().dx();
  const auto& rule = gauss_legendre(static_cast<std::size_t>(k) + 2);
  const PhysicalFlux& f = disc.flux().f;

  for (int q = 0; q <= k; ++q) {
    const double scale = (2.0 * q + 1.0) * inv_dx;
    const double sign = q % 2 == 0 ? 1.0 : -1.0;
    auto dq = out.mode(q);
    for (std::size_t i = 0; i < n; ++i) {
      // phi_q' dx = P_q'(xi) dxi, so the volume term needs no Jacobian.
      double volume = 0.0;
      if (q > 0) {
        for (std::size_t g = 0; g < rule.nodes.size(); ++g) {
          const double xi = rule.nodes[g];
          volume += rule.weights[g] * f(state.eval_in_cell(i, xi)) * legendre_derivative(q, xi);
        }
      }
      dq[i] += scale * (volume + sign * F[i] - F[i + 1]);
    }
  }
  out.check_finite("DG right-hand side");
  return out;
}

PolyState step_rk3(const PolyState& state, const Discretization& disc, double dt) {
  const bool limit = disc.degree() >= 1 && disc.config().limit;
  const double m = disc.config().limiter_m;
  auto stage_limit = [&](PolyState& s) {
    if (limit) tvb_limit_in_place(s, m, disc.boundary());
  };

  PolyState u1 = state;
  u1.axpy(dt, dg_rhs(state, disc));
  stage_limit(u1);

  PolyState u2 = u1;
  u2.axpy(dt, dg_rhs(u1, disc));
  u2.scale(0.25).axpy(0.75, state);
  stage_limit(u2);

  PolyState u3 = u2;
  u3.axpy(dt, dg_rhs(u2, disc));
  u3.scale(2.0 / 3.0).axpy(1.0 / 3.0, state);
  stage_limit(u3);
  return u3;
}

PolyState step_forward_euler(const PolyState& state, const Discretization& disc, double dt) {
  if (disc.degree() != 0) throw std::invalid_argument("forward Euler is only offered for k = 0");
  PolyState next = state;
  next.axpy(dt, dg_rhs(state, disc));
  return next;
}

}  // namespace fraclaw
