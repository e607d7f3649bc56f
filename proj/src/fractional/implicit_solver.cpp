#include "fraclaw/fractional/implicit_solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

#include "fraclaw/errors.hpp"

namespace fraclaw {
namespace {

double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

// r = rhs - (v - dt g<v>); g_v receives g<v>.
double residual(const FractionalOperator& op, double dt, std::span<const double> rhs, std::span<const double> v,
                std::span<double> g_v, std::span<double> r) {
  op.apply(v, g_v);
  double m = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    r[i] = rhs[i] - (v[i] - dt * g_v[i]);
    m = std::max(m, std::abs(r[i]));
  }
  return m;
}

bool conjugate_gradient(const FractionalOperator& op, double dt, std::span<const double> rhs, std::vector<double>& v,
                        double target, std::size_t max_iterations, std::size_t& iterations) {
  const std::size_t n = v.size();
  std::vector<double> g(n), r(n), p(n), ap(n);
  double res = residual(op, dt, rhs, v, g, r);
  if (res <= target) return true;
  p = r;
  double rr = 0.0;
  for (double x : r) rr += x * x;
  for (std::size_t it = 0; it < max_iterations; ++it) {
    ++iterations;
    op.apply(p, g);
    double pap = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      ap[i] = p[i] - dt * g[i];
      pap += p[i] * ap[i];
    }
    if (!(pap > 0.0)) return false;
    const double alpha = rr / pap;
    double rr_new = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      v[i] += alpha * p[i];
      r[i] -= alpha * ap[i];
      rr_new += r[i] * r[i];
    }
    if (max_abs(r) <= target) {
      // Confirm against the true residual, not the recurrence.
      if (residual(op, dt, rhs, v, g, r) <= target) return true;
    }
    const double beta = rr_new / rr;
    rr = rr_new;
    for (std::size_t i = 0; i < n; ++i) p[i] = r[i] + beta * p[i];
  }
  return residual(op, dt, rhs, v, g, r) <= target;
}

}  // namespace

std::vector<double> solve_implicit(const FractionalOperator& op, double dt, std::span<const double> rhs,
                                   const ImplicitSolveOptions& options, ImplicitSolveReport* report) {
  if (!(dt > 0.0)) throw std::invalid_argument("solve_implicit: dt must be positive");
  if (rhs.size() != op.n_cells()) throw std::invalid_argument("solve_implicit: rhs length does not match the operator");
  if (!(options.damping > 0.0 && options.damping <= 1.0))
    throw std::invalid_argument("solve_implicit: damping must lie in (0, 1]");

  const std::size_t n = rhs.size();
  const double target = options.tolerance * max_abs(rhs);
  const double diag = 1.0 - dt * op.diagonal();
  const double omega = options.damping;

  std::vector<double> v(rhs.begin(), rhs.end());
  std::vector<double> g(n), r(n);
  ImplicitSolveReport rep;
  double res = residual(op, dt, rhs, v, g, r);
  while (res > target && rep.iterations < options.max_iterations) {
    // Jacobi: diag * v_new = rhs + dt (g<v> - diagonal v); equivalently v += r / diag.
    for (std::size_t i = 0; i < n; ++i) v[i] += omega * r[i] / diag;
    ++rep.iterations;
    const double prev = res;
    res = residual(op, dt, rhs, v, g, r);
    if (!std::isfinite(res)) break;
    if (res > 0.999 * prev && options.allow_cg_fallback) break;
  }
  if (!(res <= target) && options.allow_cg_fallback) {
    if (!std::isfinite(res)) v.assign(rhs.begin(), rhs.end());
    rep.used_cg = true;
    conjugate_gradient(op, dt, rhs, v, target, std::max<std::size_t>(options.max_iterations, n), rep.iterations);
    res = residual(op, dt, rhs, v, g, r);
  }
  rep.residual = res;
  if (report) *report = rep;
  if (!(res <= target)) {
    std::ostringstream msg;
    msg << "implicit solve did not converge: residual " << std::scientific << res << " (target " << target
        << ") after " << rep.iterations << " iterations";
    throw NumericalError(msg.str());
  }
  return v;
}

std::vector<double> solve_implicit(const FracStencil& stencil, double dt, std::span<const double> rhs,
                                   const ImplicitSolveOptions& options, ImplicitSolveReport* report) {
  return solve_implicit(FractionalOperator(stencil, rhs.size(), Boundary::zero_extension), dt, rhs, options, report);
}

}  // namespace fraclaw
