#pragma once

// Brute-force quadrature oracles shared by the unit and acceptance tests.
// They integrate the singular kernel directly and never use the closed forms
// of the library.

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <cstdint>

namespace fraclaw::oracle {

// Keeps tanh-sinh abscissae at least 1e-120 away from the endpoints so the
// kernel stays finite.
inline boost::math::quadrature::tanh_sinh<double> make_tanh_sinh() {
  return boost::math::quadrature::tanh_sinh<double>(15, 1e-120);
}

template <class F>
double adaptive(F&& f, double a, double b) {
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, 25, 1e-14);
}

// Legendre polynomial of degree p on cell [a, a+1], as a function of x.
inline double cell_phi(int p, double a, double x) {
  const double xi = 2.0 * (x - a) - 1.0;
  switch (p) {
    case 0: return 1.0;
    case 1: return xi;
    default: return 0.5 * (3.0 * xi * xi - 1.0);
  }
}

// int_0^1 dx int_m^{m+1} dy w(x, y) |y - x|^{-1-lambda} for m >= 1.
//
// Adjacent cells (m = 1) are singular at the shared corner. There both
// variables are replaced by logarithms of distances, s = 1 - x = e^rho and
// y - x = e^sigma, which turns the integrand into a smooth, exponentially
// decaying function; rho is cut at -400, far below double resolution.
template <class W>
double pair_integral(double lambda, std::int64_t m, W&& w) {
  const double md = static_cast<double>(m);
  if (m == 1) {
    auto outer = [&](double rho) {
      const double s = std::exp(rho);
      const double x = 1.0 - s;
      auto inner = [&](double sigma) {
        const double d = std::exp(sigma);
        return w(x, x + d) * std::pow(d, -lambda);
      };
      return s * adaptive(inner, rho, std::log1p(s));
    };
    return adaptive(outer, -400.0, 0.0);
  }
  auto ts = make_tanh_sinh();
  auto outer = [&](double x) {
    auto inner = [&](double y) { return w(x, y) * std::pow(y - x, -1.0 - lambda); };
    return ts.integrate(inner, md, md + 1.0, 1e-14);
  };
  return ts.integrate(outer, 0.0, 1.0, 1e-13);
}

// c int_{I_0} int_{I_m} |x - y|^{-1-lambda} dy dx on the unit grid, m >= 1.
inline double offdiag_weight(double lambda, double c, std::int64_t m) {
  return c * pair_integral(lambda, m, [](double, double) { return 1.0; });
}

// Coupling int_{I_0} phi_q g[phi_{p,m}] on the unit grid with c = 1, m >= 1:
// the supports are disjoint, so g reduces to the plain kernel integral.
inline double dg_coupling_offset(double lambda, std::int64_t m, int q, int p) {
  const double md = static_cast<double>(m);
  return pair_integral(lambda, m, [&](double x, double y) { return cell_phi(q, 0.0, x) * cell_phi(p, md, y); });
}

// Self coupling int_{I_0} phi_q g[phi_p] with c = 1, from the bilinear form
//   -1/2 int int (phi_q(x)-phi_q(y))(phi_p(x)-phi_p(y)) |x-y|^{-1-lambda}.
// Pairs inside I_0 x I_0 are integrated over the triangle y < x (twice);
// pairs with y outside reduce to phi_q phi_p (x^{-lambda} + (1-x)^{-lambda}) / lambda,
// the exterior kernel integrated in y.
inline double dg_coupling_self(double lambda, int q, int p) {
  auto ts = make_tanh_sinh();
  auto outer = [&](double x) {
    auto inner = [&](double u) {  // u = x - y in (0, x)
      if (u < 1e-100) return 0.0;  // the integrand is O(u^{1-lambda})
      const double y = x - u;
      return (cell_phi(q, 0, x) - cell_phi(q, 0, y)) * (cell_phi(p, 0, x) - cell_phi(p, 0, y)) *
             std::pow(u, -1.0 - lambda);
    };
    return x > 1e-100 ? ts.integrate(inner, 0.0, x, 1e-13) : 0.0;
  };
  const double inside = 2.0 * ts.integrate(outer, 0.0, 1.0, 1e-12);
  auto ext = [&](double x, double xc) {
    const double r = xc > 0 ? xc : 1.0 - x;
    const double l = xc < 0 ? -xc : x;
    return cell_phi(q, 0, x) * cell_phi(p, 0, x) * (std::pow(l, -lambda) + std::pow(r, -lambda)) / lambda;
  };
  // Each exterior pair appears twice in the double integral, which cancels the 1/2.
  return -0.5 * inside - ts.integrate(ext, 0.0, 1.0, 1e-13);
}

}  // namespace fraclaw::oracle
