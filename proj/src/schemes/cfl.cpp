#include "fraclaw/schemes/cfl.hpp"

#include <cmath>
#include <stdexcept>

namespace fraclaw {

double cfl_dt(const SchemeConfig& config, double dx) {
  if (!(dx > 0.0) || !std::isfinite(dx)) throw std::invalid_argument("cfl_dt: dx must be positive");
  const double convective = config.flux.F1 + config.flux.F2;
  if (config.kind == SchemeKind::imex_fv) {
    // Without convection the implicit scheme has no restriction; keep dt ~ dx.
    return convective > 0.0 ? config.cfl_safety * dx / convective : config.cfl_safety * dx;
  }
  const double d = diagonal_coefficient(config.lambda, normalization_c_lambda(config.lambda));
  const double dt = config.cfl_safety / (convective / dx + d / std::pow(dx, config.lambda));
  if (config.kind == SchemeKind::dg_rk3) return dt / (2.0 * config.degree + 1.0);
  return dt;
}

}  // namespace fraclaw
