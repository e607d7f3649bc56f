#include "fraclaw/flux/numerical_flux.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/minima.hpp>

namespace fraclaw {
namespace {

// min of f over [lo, hi]: coarse scan, then Brent around the best sample.
double minimise(const std::function<double(double)>& g, double lo, double hi) {
  constexpr int kScan = 64;
  int best = 0;
  double best_val = g(lo);
  for (int s = 1; s <= kScan; ++s) {
    const double v = g(lo + (hi - lo) * s / kScan);
    if (v < best_val) {
      best_val = v;
      best = s;
    }
  }
  const double a = lo + (hi - lo) * std::max(best - 1, 0) / kScan;
  const double b = lo + (hi - lo) * std::min(best + 1, kScan) / kScan;
  const auto r = boost::math::tools::brent_find_minima(g, a, b, 52);
  return std::min({best_val, r.second, g(lo), g(hi)});
}

double godunov(const PhysicalFlux& f, double a, double b) {
  if (a == b) return f(a);
  if (f.is_linear()) return a <= b ? std::min(f(a), f(b)) : std::max(f(a), f(b));
  // A convex flux attains its max over an interval at an endpoint.
  if (a > b && f.is_convex()) return std::max(f(a), f(b));
  if (f.kind() == PhysicalFluxKind::burgers) return (a <= 0.0 && 0.0 <= b) ? 0.0 : std::min(f(a), f(b));
  if (a <= b) return minimise([&](double u) { return f(u); }, a, b);
  return -minimise([&](double u) { return -f(u); }, b, a);
}

double split_integral(const std::function<double(double)>& g, double a) {
  if (a == 0.0) return 0.0;
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(g, 0.0, a, 15, 1e-14);
}

double engquist_osher(const PhysicalFlux& f, double a, double b) {
  switch (f.kind()) {
    case PhysicalFluxKind::zero: return 0.0;
    case PhysicalFluxKind::linear: return std::max(f.speed(), 0.0) * a + std::min(f.speed(), 0.0) * b;
    case PhysicalFluxKind::burgers: {
      const double ap = std::max(a, 0.0);
      const double bm = std::min(b, 0.0);
      return 0.5 * (ap * ap + bm * bm);
    }
    case PhysicalFluxKind::custom: break;
  }
  const double plus = split_integral([&](double s) { return std::max(f.derivative(s), 0.0); }, a);
  const double minus = split_integral([&](double s) { return std::min(f.derivative(s), 0.0); }, b);
  return f(0.0) + plus + minus;
}

}  // namespace

std::string to_string(NumericalFluxKind kind) {
  switch (kind) {
    case NumericalFluxKind::lax_friedrichs: return "lax_friedrichs";
    case NumericalFluxKind::engquist_osher: return "engquist_osher";
    case NumericalFluxKind::godunov: return "godunov";
    case NumericalFluxKind::linear_upwind: return "linear_upwind";
    case NumericalFluxKind::central: return "central";
  }
  return "";
}

NumericalFluxKind parse_numerical_flux(const std::string& name) {
  for (auto k : {NumericalFluxKind::lax_friedrichs, NumericalFluxKind::engquist_osher, NumericalFluxKind::godunov,
                 NumericalFluxKind::linear_upwind, NumericalFluxKind::central}) {
    if (to_string(k) == name) return k;
  }
  throw std::invalid_argument("unknown numerical flux '" + name + "'");
}

FluxSpec make_flux(NumericalFluxKind kind, PhysicalFlux f, double u_inf) {
  if (!(u_inf >= 0.0) || !std::isfinite(u_inf)) throw std::invalid_argument("make_flux: u_inf must be finite and >= 0");
  if (kind == NumericalFluxKind::linear_upwind && !f.is_linear())
    throw std::invalid_argument("linear_upwind flux needs a linear physical flux");
  FluxSpec spec;
  spec.kind = kind;
  spec.f = std::move(f);
  spec.u_inf = u_inf;
  spec.lf_speed = spec.f.max_abs_derivative(-u_inf, u_inf);
  std::tie(spec.F1, spec.F2) = lipschitz_constants(spec, u_inf);
  return spec;
}

double evaluate(const FluxSpec& flux, double a, double b) {
  const PhysicalFlux& f = flux.f;
  switch (flux.kind) {
    case NumericalFluxKind::lax_friedrichs: return 0.5 * (f(a) + f(b) - flux.lf_speed * (b - a));
    case NumericalFluxKind::engquist_osher: return engquist_osher(f, a, b);
    case NumericalFluxKind::godunov: return godunov(f, a, b);
    case NumericalFluxKind::linear_upwind: {
      const double c = f.speed();
      return 0.5 * c * (a + b) - 0.5 * std::abs(c) * (b - a);
    }
    case NumericalFluxKind::central: return 0.5 * (f(a) + f(b));
  }
  return 0.0;
}

std::pair<double, double> lipschitz_constants(const FluxSpec& flux, double u_inf) {
  if (!(u_inf >= 0.0)) throw std::invalid_argument("lipschitz_constants: u_inf must be >= 0");
  const PhysicalFlux& f = flux.f;
  switch (flux.kind) {
    case NumericalFluxKind::lax_friedrichs: {
      const double l = 0.5 * (f.max_abs_derivative(-u_inf, u_inf) + flux.lf_speed);
      return {l, l};
    }
    case NumericalFluxKind::central: {
      const double l = 0.5 * f.max_abs_derivative(-u_inf, u_inf);
      return {l, l};
    }
    case NumericalFluxKind::godunov:
    case NumericalFluxKind::engquist_osher:
      return {f.max_positive_derivative(-u_inf, u_inf), f.max_negative_derivative(-u_inf, u_inf)};
    case NumericalFluxKind::linear_upwind: {
      const double c = f.speed();
      return c >= 0.0 ? std::pair{c, 0.0} : std::pair{0.0, -c};
    }
  }
  return {0.0, 0.0};
}

double eflux_defect(const FluxSpec& flux, double a, double b) {
  return evaluate(flux, a, b) * (b - a) - flux.f.integral(a, b);
}

bool is_eflux(const FluxSpec& flux, std::span<const std::pair<double, double>> samples) {
  return std::all_of(samples.begin(), samples.end(),
                     [&](const auto& s) { return eflux_defect(flux, s.first, s.second) <= 1e-12; });
}

}  // namespace fraclaw
