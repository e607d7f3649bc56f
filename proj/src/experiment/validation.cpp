#include "fraclaw/experiment/validation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>

#include "fraclaw/experiment/norms.hpp"
#include "fraclaw/flux/numerical_flux.hpp"
#include "fraclaw/fractional/fractional_operator.hpp"
#include "fraclaw/fractional/implicit_solver.hpp"
#include "fraclaw/mesh/projection.hpp"
#include "fraclaw/schemes/dg_rhs.hpp"
#include "fraclaw/schemes/discretization.hpp"
#include "fraclaw/schemes/fv_schemes.hpp"

namespace fraclaw {
namespace {

std::string sci(const char* label, double v) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%s %.3e", label, v);
  return buf;
}

std::vector<double> random_vector(std::mt19937_64& rng, std::size_t n, double lo, double hi) {
  std::uniform_real_distribution<double> d(lo, hi);
  std::vector<double> v(n);
  for (double& x : v) x = d(rng);
  return v;
}

SchemeConfig burgers_config(SchemeKind kind) {
  SchemeConfig c;
  c.kind = kind;
  c.lambda = 0.5;
  c.flux = make_flux(NumericalFluxKind::lax_friedrichs, PhysicalFlux::burgers(), 1.0);
  return c;
}

CheckResult stencil_row_sum() {
  double worst = 0.0;
  for (double lambda : {0.1, 0.5, 0.9}) {
    const auto s = FracStencil::build(lambda, 0.01, 500);
    worst = std::max(worst, std::abs(s.truncated_row_sum() + 2.0 * s.tail_sum()));
  }
  return {"stencil row sum vanishes with tail", worst <= 1e-10, sci("max |row sum|", worst)};
}

CheckResult dense_fft(std::mt19937_64& rng) {
  const auto s = FracStencil::build(0.5, 0.01, 300);
  double worst = 0.0;
  for (Boundary b : {Boundary::zero_extension, Boundary::periodic}) {
    const FractionalOperator op(s, 300, b);
    const auto u = random_vector(rng, 300, -1.0, 1.0);
    const auto d = op.apply(u, MatvecPath::dense);
    const auto f = op.apply(u, MatvecPath::fft);
    double scale = 0.0;
    for (std::size_t i = 0; i < d.size(); ++i) {
      worst = std::max(worst, std::abs(d[i] - f[i]));
      scale = std::max(scale, std::abs(d[i]));
    }
    worst /= scale;
  }
  return {"dense and FFT matvec agree", worst <= 1e-12, sci("relative difference", worst)};
}

CheckResult symmetry_and_sign(std::mt19937_64& rng) {
  const auto s = FracStencil::build(0.5, 0.02, 150);
  const FractionalOperator op(s, 150, Boundary::zero_extension);
  double asym = 0.0;
  double max_form = -INFINITY;
  for (int t = 0; t < 20; ++t) {
    const auto u = random_vector(rng, 150, -1.0, 1.0);
    const auto v = random_vector(rng, 150, -1.0, 1.0);
    const auto gu = op.apply(u);
    const auto gv = op.apply(v);
    double uv = 0.0, vu = 0.0, uu = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
      uv += gu[i] * v[i];
      vu += u[i] * gv[i];
      uu += gu[i] * u[i];
    }
    asym = std::max(asym, std::abs(uv - vu) / std::max(std::abs(uv), 1.0));
    max_form = std::max(max_form, uu);
  }
  const bool ok = asym <= 1e-12 && max_form <= 0.0;
  return {"operator symmetric and nonpositive", ok, sci("asymmetry", asym) + ", " + sci("max <gU,U>", max_form)};
}

CheckResult implicit_bounds(std::mt19937_64& rng) {
  const auto s = FracStencil::build(0.5, 0.01, 200);
  const FractionalOperator op(s, 200, Boundary::periodic);
  double worst = 0.0;
  for (int t = 0; t < 20; ++t) {
    const auto h = random_vector(rng, 200, -1.0, 1.0);
    const auto v = solve_implicit(op, 0.05, h);
    const auto [hlo, hhi] = std::minmax_element(h.begin(), h.end());
    const auto [vlo, vhi] = std::minmax_element(v.begin(), v.end());
    double l1h = 0.0, l1v = 0.0;
    for (std::size_t i = 0; i < h.size(); ++i) {
      l1h += std::abs(h[i]);
      l1v += std::abs(v[i]);
    }
    worst = std::max({worst, *hlo - *vlo, *vhi - *hhi, l1v - l1h});
  }
  return {"implicit solve max/min and l1 bounds", worst <= 1e-12, sci("worst excess", worst)};
}

CheckResult scheme_monotone_decay(std::mt19937_64& rng) {
  const GridSpec grid(-1.5, 1.5, 120);
  double worst_order = 0.0;
  double worst_growth = 0.0;
  for (SchemeKind kind : {SchemeKind::explicit_fv, SchemeKind::imex_fv}) {
    const Discretization disc(burgers_config(kind), grid);
    const double dt = disc.cfl_dt();
    for (int t = 0; t < 20; ++t) {
      auto u = random_vector(rng, 120, -1.0, 1.0);
      auto w = u;
      for (double& x : w) x = std::min(1.0, x + 0.3 * std::uniform_real_distribution<double>(0.0, 1.0)(rng));
      const PolyState U(grid, 0, u), W(grid, 0, w);
      const PolyState Un = disc.step(U, dt), Wn = disc.step(W, dt);
      for (std::size_t i = 0; i < 120; ++i) worst_order = std::max(worst_order, Un(0, i) - Wn(0, i));
      for (NormKind k : {NormKind::l1, NormKind::linf, NormKind::bv}) {
        const bool ext = k == NormKind::bv;
        worst_growth = std::max(worst_growth, norm(Un, k, ext) - norm(U, k, ext));
      }
    }
  }
  const bool ok = worst_order <= 1e-12 && worst_growth <= 1e-12;
  return {"finite-volume steps monotone with L1/Linf/BV decay", ok,
          sci("order violation", worst_order) + ", " + sci("norm growth", worst_growth)};
}

CheckResult entropy(std::mt19937_64& rng) {
  const GridSpec grid(-1.5, 1.5, 120);
  const Discretization disc(burgers_config(SchemeKind::imex_fv), grid);
  const double dt = disc.cfl_dt();
  double worst = -INFINITY;
  for (int t = 0; t < 5; ++t) {
    const PolyState U(grid, 0, random_vector(rng, 120, -1.0, 1.0));
    const PolyState V = disc.step(U, dt);
    for (double k : random_vector(rng, 10, -1.2, 1.2)) worst = std::max(worst, entropy_violation(U, V, disc, dt, k));
  }
  return {"cell entropy inequality", worst <= 1e-12, sci("max violation", worst)};
}

CheckResult eflux(std::mt19937_64& rng) {
  std::vector<std::pair<double, double>> samples;
  const auto a = random_vector(rng, 200, -1.0, 1.0);
  const auto b = random_vector(rng, 200, -1.0, 1.0);
  for (std::size_t i = 0; i < a.size(); ++i) samples.emplace_back(a[i], b[i]);
  bool ok = true;
  for (auto kind : {NumericalFluxKind::lax_friedrichs, NumericalFluxKind::engquist_osher, NumericalFluxKind::godunov})
    ok = ok && is_eflux(make_flux(kind, PhysicalFlux::burgers(), 1.0), samples);
  const bool central_fails = !is_eflux(make_flux(NumericalFluxKind::central, PhysicalFlux::burgers(), 1.0),
                                       std::vector<std::pair<double, double>>{{-1.0, 1.0}});
  return {"monotone fluxes are E-fluxes, central is not", ok && central_fails, ""};
}

CheckResult dg_l2_decay(std::mt19937_64& rng) {
  const GridSpec grid(-1.5, 1.5, 60);
  SchemeConfig c;
  c.kind = SchemeKind::dg_rk3;
  c.degree = 1;
  c.cfl_safety = 0.5;
  c.limit = false;
  c.boundary = Boundary::periodic;
  c.flux = make_flux(NumericalFluxKind::lax_friedrichs, PhysicalFlux::linear(1.0), 1.0);
  const Discretization disc(c, grid);
  const double dt = disc.cfl_dt();
  std::normal_distribution<double> nd;
  const double a1 = nd(rng), a2 = nd(rng);
  PolyState u = project_l2([&](double x) { return a1 * std::sin(2.0 * std::numbers::pi * x / 3.0) + a2 * std::cos(4.0 * std::numbers::pi * x / 3.0); },
                           grid, 1);
  double worst = 0.0;
  double prev = norm(u, NormKind::l2);
  for (int s = 0; s < 50; ++s) {
    u = step_rk3(u, disc, dt);
    const double now = norm(u, NormKind::l2);
    worst = std::max(worst, now - prev);
    prev = now;
  }
  return {"DG k=1 L2 norm nonincreasing", worst <= 1e-10, sci("max growth", worst)};
}

}  // namespace

std::vector<CheckResult> run_validation_suite() {
  std::mt19937_64 rng(20240611);
  return {stencil_row_sum(),      dense_fft(rng),      symmetry_and_sign(rng), implicit_bounds(rng),
          scheme_monotone_decay(rng), entropy(rng),    eflux(rng),             dg_l2_decay(rng)};
}

}  // namespace fraclaw
