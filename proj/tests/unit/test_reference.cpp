#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "fraclaw/fractional/fractional_operator.hpp"
#include "fraclaw/fractional/stencil.hpp"
#include "fraclaw/mesh/projection.hpp"
#include "fraclaw/mesh/quadrature.hpp"
#include "fraclaw/reference/fine_grid.hpp"
#include "fraclaw/reference/spectral.hpp"
#include "fraclaw/schemes/driver.hpp"

namespace fraclaw {
namespace {

constexpr double kPi = std::numbers::pi;
using cplx = std::complex<double>;

double gaussian(double x) { return std::exp(-32.0 * x * x); }

std::vector<double> samples(const SpectralGrid& g, double (*f)(double)) {
  std::vector<double> v(g.n_modes);
  for (std::size_t j = 0; j < g.n_modes; ++j) v[j] = f(g.x(j));
  return v;
}

// Naive DFT u_hat_k = sum_j u_j e^{-i xi_k (x_j - x_left)} / n.
std::vector<cplx> dft(const SpectralGrid& g, const std::vector<double>& u) {
  const std::size_t n = g.n_modes;
  std::vector<cplx> c(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) c[k] += u[j] * std::polar(1.0, -2 * kPi * double(k * j % n) / double(n));
    c[k] /= double(n);
  }
  return c;
}

TEST(Spectral, GridChecks) {
  const auto g = make_spectral_grid(-1.5, 1.5, 256);
  EXPECT_DOUBLE_EQ(g.period, 6.0);
  EXPECT_DOUBLE_EQ(g.x(0), -3.0);
  EXPECT_DOUBLE_EQ(g.xi(1), 2 * kPi / 6.0);
  EXPECT_DOUBLE_EQ(g.xi(255), -2 * kPi / 6.0);
  EXPECT_THROW(make_spectral_grid(-1, 1, 100), std::invalid_argument);
  EXPECT_THROW(make_spectral_grid(-1, 1, 128, 0.5), std::invalid_argument);
}

TEST(Spectral, IdentityAtTimeZero) {
  const auto g = make_spectral_grid(-1.5, 1.5, 512);
  const auto u0 = samples(g, gaussian);
  const auto u = spectral_linear_solve(g, u0, 1.0, 0.5, 0.0);
  for (std::size_t j = 0; j < u0.size(); ++j) EXPECT_NEAR(u[j], u0[j], 1e-12);
  const auto h = fractional_heat_solve(g, u0, 0.3, 0.0);
  for (std::size_t j = 0; j < u0.size(); ++j) EXPECT_NEAR(h[j], u0[j], 1e-12);
}

TEST(Spectral, HeatFlowIsEvenPositiveAndMassPreserving) {
  const auto g = make_spectral_grid(-1.5, 1.5, 1024);
  const auto u0 = samples(g, gaussian);
  const auto u = fractional_heat_solve(g, u0, 0.5, 0.2);
  double m0 = 0.0, m = 0.0;
  const double h = g.period / double(g.n_modes);
  for (std::size_t j = 0; j < u.size(); ++j) {
    m0 += u0[j] * h;
    m += u[j] * h;
    EXPECT_GT(u[j], 0.0);
    EXPECT_NEAR(u[j], u[(g.n_modes - j) % g.n_modes], 1e-13);
  }
  EXPECT_NEAR(m, m0, 1e-10);
}

TEST(Spectral, MultiplierDampsEveryMode) {
  const auto g = make_spectral_grid(-1, 1, 256);
  auto indicator = [](double x) { return std::abs(x) < 0.25 ? 1.0 : 0.0; };
  std::vector<double> u0(g.n_modes);
  for (std::size_t j = 0; j < g.n_modes; ++j) u0[j] = indicator(g.x(j));
  const double lambda = 0.6, t = 0.05;
  const auto a = dft(g, u0);
  const auto b = dft(g, fractional_heat_solve(g, u0, lambda, t));
  for (std::size_t k = 0; k < g.n_modes; ++k)
    EXPECT_NEAR(std::abs(b[k]), std::abs(a[k]) * std::exp(-std::pow(std::abs(g.xi(k)), lambda) * t), 1e-14);
}

TEST(Spectral, SemigroupAndL2Decay) {
  const auto g = make_spectral_grid(-1.5, 1.5, 512);
  const auto u0 = samples(g, gaussian);
  const auto direct = spectral_linear_solve(g, u0, 0.7, 0.4, 0.3);
  const auto twice = spectral_linear_solve(g, spectral_linear_solve(g, u0, 0.7, 0.4, 0.1), 0.7, 0.4, 0.2);
  for (std::size_t j = 0; j < u0.size(); ++j) EXPECT_NEAR(direct[j], twice[j], 1e-13);
  double prev = 1e300;
  for (double t : {0.0, 0.05, 0.1, 0.4, 1.0}) {
    double e = 0.0;
    for (double v : spectral_linear_solve(g, u0, 1.0, 0.5, t)) e += v * v;
    EXPECT_LE(e, prev * (1 + 1e-14));
    prev = e;
  }
}

TEST(Spectral, ShortTimesTransport) {
  const auto g = make_spectral_grid(-1.5, 1.5, 1024);
  const auto u0 = samples(g, gaussian);
  auto err = [&](double t) {
    const auto u = spectral_linear_solve(g, u0, 1.0, 0.5, t);
    double e = 0.0;
    for (std::size_t j = 0; j < u.size(); ++j) e = std::max(e, std::abs(u[j] - gaussian(g.x(j) - t)));
    return e;
  };
  const double e1 = err(1e-3), e2 = err(5e-4);
  EXPECT_LT(e1, 1e-2);
  EXPECT_NEAR(e1 / e2, 2.0, 0.1);
}

TEST(Spectral, EdgeDecayCheck) {
  const auto g = make_spectral_grid(-1.5, 1.5, 256, 1.0);
  EXPECT_THROW(check_edge_decay(samples(g, [](double x) { return std::exp(-x * x); })), std::domain_error);
  EXPECT_NO_THROW(check_edge_decay(samples(g, gaussian)));
}

TEST(Spectral, SolutionObjectAgreesWithSamplesAndAverages) {
  const auto g = make_spectral_grid(-1.5, 1.5, 512);
  const SpectralSolution sol(g, gaussian, 1.0, 0.5, 0.2);
  const auto u = spectral_linear_solve(g, samples(g, gaussian), 1.0, 0.5, 0.2);
  for (std::size_t j = 0; j < g.n_modes; j += 7) EXPECT_NEAR(sol(g.x(j)), u[j], 1e-13);
  for (auto [a, b] : {std::pair{-0.3, -0.1}, std::pair{0.05, 0.06}, std::pair{0.5, 1.5}}) {
    const double q = integrate_gauss([&](double x) { return sol(x); }, a, b, 40) / (b - a);
    EXPECT_NEAR(sol.average(a, b), q, 1e-12);
  }
}

// Cell averages of g[u] for a trigonometric interpolant, from the naive DFT.
std::vector<double> spectral_operator_averages(const SpectralGrid& sg, const GridSpec& grid, double lambda) {
  const auto c = dft(sg, samples(sg, gaussian));
  std::vector<double> out(grid.n_cells());
  const std::size_t n = sg.n_modes;
  for (std::size_t i = 0; i < grid.n_cells(); ++i) {
    const double a = grid.cell_left(i) - sg.x_left, b = grid.cell_right(i) - sg.x_left;
    cplx s = 0.0;
    for (std::size_t k = 1; k < n; ++k) {
      if (k == n / 2) continue;  // negligible for the resolved Gaussian
      const double xi = sg.xi(k);
      s += -std::pow(std::abs(xi), lambda) * c[k] * (std::polar(1.0, xi * b) - std::polar(1.0, xi * a)) /
           (cplx(0, xi) * grid.dx());
    }
    out[i] = s.real();
  }
  return out;
}

// Both operators act on the same period [-3, 3], so periodic images cancel.
TEST(Spectral, StencilConvergesToSpectralOperator) {
  const double lambda = 0.5;
  const auto sg = make_spectral_grid(-3, 3, 512, 1.0);
  const double root = std::sqrt(32.0);
  double prev = 0.0;
  for (std::size_t n : {60u, 120u, 240u, 480u}) {
    const GridSpec grid(-3, 3, n);
    std::vector<double> u(n);
    for (std::size_t i = 0; i < n; ++i)
      u[i] = std::sqrt(kPi) / (2 * root) * (std::erf(root * grid.cell_right(i)) - std::erf(root * grid.cell_left(i))) /
             grid.dx();
    const auto g = fraclaw::apply(FracStencil::build(lambda, grid.dx(), 16 * n), u, Boundary::periodic);
    const auto ref = spectral_operator_averages(sg, grid, lambda);
    double err = 0.0;
    for (std::size_t i = 0; i < n; ++i) err += grid.dx() * std::abs(g[i] - ref[i]);
    if (prev > 0.0) {
      EXPECT_GE(std::log2(prev / err), 1.0 - lambda);
    }
    prev = err;
  }
}

TEST(FineGrid, RestrictionAndFactor) {
  const GridSpec coarse(-1, 1, 10), fine(-1, 1, 40);
  EXPECT_EQ(refinement_factor(coarse, fine), 4u);
  EXPECT_THROW(refinement_factor(coarse, GridSpec(-1, 1, 25)), std::invalid_argument);
  EXPECT_THROW(refinement_factor(coarse, GridSpec(-1, 2, 40)), std::invalid_argument);
  std::vector<double> f(40);
  for (std::size_t i = 0; i < 40; ++i) f[i] = std::sin(double(i) * 0.7) + 0.1 * double(i);
  const auto r = restrict_averages(f, 4);
  double mf = 0.0, mc = 0.0;
  for (double v : f) mf += v * fine.dx();
  for (double v : r) mc += v * coarse.dx();
  EXPECT_NEAR(mf, mc, 1e-14);
}

TEST(FineGrid, RestrictToCoarseProjects) {
  const GridSpec coarse(0, 1, 8), fine(0, 1, 32);
  const PolyState c = project_l2([](double x) { return x * x; }, coarse, 2);
  // A coarse piecewise polynomial seen on the fine grid restricts back to itself.
  const PolyState f = project_l2([&](double x) { return reconstruct(c, std::min(x, 1.0)); }, fine, 2);
  const PolyState back = restrict_to_coarse(f, coarse, 2);
  for (std::size_t j = 0; j < c.data().size(); ++j) EXPECT_NEAR(back.data()[j], c.data()[j], 1e-14);
  const PolyState same = restrict_to_coarse(c, coarse, 2);
  for (std::size_t j = 0; j < c.data().size(); ++j) EXPECT_NEAR(same.data()[j], c.data()[j], 1e-15);
}

TEST(FineGrid, ReferenceOnTheSameGridIsTheRun) {
  SchemeConfig c;
  c.flux = make_flux(NumericalFluxKind::lax_friedrichs, PhysicalFlux::burgers(), 1.0);
  c.t_end = 0.1;
  const GridSpec g(-1.5, 1.5, 60);
  const InitialData u0{[](double x) { return std::sin(2 * kPi * x); }, {}};
  const PolyState ref = fine_grid_reference(c, u0, g);
  const PolyState r = run(c, u0, g).final_state();
  for (std::size_t j = 0; j < r.data().size(); ++j) EXPECT_EQ(ref.data()[j], r.data()[j]);
}

}  // namespace
}  // namespace fraclaw
