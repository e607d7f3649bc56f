#include "fraclaw/schemes/discretization.hpp"

#include <cmath>
#include <stdexcept>

#include "fraclaw/errors.hpp"
#include "fraclaw/mesh/legendre.hpp"
#include "fraclaw/schemes/cfl.hpp"
#include "fraclaw/schemes/dg_rhs.hpp"
#include "fraclaw/schemes/fv_schemes.hpp"

namespace fraclaw {

std::string to_string(SchemeKind kind) {
  switch (kind) {
    case SchemeKind::explicit_fv: return "explicit_fv";
    case SchemeKind::imex_fv: return "imex_fv";
    case SchemeKind::dg_rk3: return "dg_rk3";
  }
  return "";
}

SchemeKind parse_scheme_kind(const std::string& name) {
  for (auto k : {SchemeKind::explicit_fv, SchemeKind::imex_fv, SchemeKind::dg_rk3})
    if (to_string(k) == name) return k;
  throw std::invalid_argument("unknown scheme '" + name + "'");
}

std::size_t default_m_trunc(Boundary boundary, std::size_t n_cells) {
  return boundary == Boundary::periodic ? 16 * n_cells : n_cells;
}

void validate(const SchemeConfig& c) {
  if (c.degree < 0 || c.degree > kMaxDegree) throw ConfigError("k", "degree must be 0, 1 or 2");
  if (c.kind != SchemeKind::dg_rk3 && c.degree != 0)
    throw ConfigError("k", to_string(c.kind) + " is a finite-volume scheme and requires k = 0");
  if (c.kind == SchemeKind::dg_rk3 && !c.flux.monotone())
    throw ConfigError("flux", "dg_rk3 requires a monotone numerical flux");
  if (!c.flux.monotone()) throw ConfigError("flux", "schemes require a monotone numerical flux");
  if (!(c.cfl_safety > 0.0 && c.cfl_safety <= 1.0)) throw ConfigError("cfl_safety", "must lie in (0, 1]");
  if (!(c.lambda > 0.0 && c.lambda < 1.0)) throw ConfigError("lambda", "must lie in (0, 1)");
  if (!(c.t_end >= 0.0) || !std::isfinite(c.t_end)) throw ConfigError("t_end", "must be finite and >= 0");
  if (!(c.limiter_m >= 0.0)) throw ConfigError("limiter_m", "must be >= 0");
}

Discretization::Discretization(SchemeConfig config, GridSpec grid)
    : config_((validate(config), std::move(config))),
      grid_(grid),
      stencil_(FracStencil::build(config_.lambda, grid.dx(),
                                  config_.m_trunc ? config_.m_trunc : default_m_trunc(config_.boundary, grid.n_cells()))),
      fractional_(stencil_, grid.n_cells(), config_.boundary) {
  if (config_.degree >= 1) {
    const std::size_t m = config_.m_trunc ? config_.m_trunc : default_m_trunc(config_.boundary, grid.n_cells());
    weights_ = DGWeightTable::build(config_.lambda, grid.dx(), config_.degree, m);
    nonlocal_ = std::make_unique<DGNonlocalOperator>(*weights_, stencil_, grid.n_cells(), config_.boundary);
  }
}

void Discretization::nonlocal_term(const PolyState& state, PolyState& out) const {
  if (config_.degree == 0) {
    fractional_.apply(state.data(), out.data());
    return;
  }
  nonlocal_->apply(state.data(), out.data());
  const double inv_dx = 1.0 / grid_.dx();
  for (int q = 0; q <= config_.degree; ++q)
    for (double& v : out.mode(q)) v *= (2.0 * q + 1.0) * inv_dx;
}

PolyState Discretization::step(const PolyState& state, double dt) const {
  PolyState next = [&] {
    switch (config_.kind) {
      case SchemeKind::explicit_fv: return step_explicit_fv(state, *this, dt);
      case SchemeKind::imex_fv: return step_imex_fv(state, *this, dt);
      case SchemeKind::dg_rk3: return step_rk3(state, *this, dt);
    }
    throw std::logic_error("unreachable scheme kind");
  }();
  next.check_finite("time step");
  return next;
}

double Discretization::cfl_dt() const { return fraclaw::cfl_dt(config_, grid_.dx()); }

}  // namespace fraclaw
