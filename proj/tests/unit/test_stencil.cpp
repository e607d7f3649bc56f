#include <gtest/gtest.h>

#include <boost/math/quadrature/ooura_fourier_integrals.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "fraclaw/fractional/fractional_operator.hpp"
#include "fraclaw/fractional/stencil.hpp"
#include "fraclaw/fractional/stencil_io.hpp"
#include "oracles.hpp"

namespace fraclaw {
namespace {

constexpr double kPi = std::numbers::pi;

// int_R (1 - cos z) |z|^{-1-lambda} dz, split at |z| = 1; the oscillatory tail
// goes through the Ooura transform.
double symbol_integral(double lambda) {
  auto ts = oracle::make_tanh_sinh();
  const double near = ts.integrate(
      [&](double z) {
        const double s = std::sin(0.5 * z);
        return 2.0 * s * s * std::pow(z, -1.0 - lambda);
      },
      0.0, 1.0);
  boost::math::quadrature::ooura_fourier_cos<double> oc;
  boost::math::quadrature::ooura_fourier_sin<double> os;
  auto w = [&](double t) { return std::pow(1.0 + t, -1.0 - lambda); };
  const double cos_tail = std::cos(1.0) * oc.integrate(w, 1.0).first - std::sin(1.0) * os.integrate(w, 1.0).first;
  return 2.0 * (near + 1.0 / lambda - cos_tail);
}

TEST(Normalization, KnownValueAndSymbol) {
  EXPECT_NEAR(normalization_c_lambda(0.5), 0.19947114020071635, 1e-15);
  for (double lambda : {0.1, 0.3, 0.5, 0.7, 0.9})
    EXPECT_NEAR(normalization_c_lambda(lambda) * symbol_integral(lambda), 1.0, 1e-9) << lambda;
}

TEST(Normalization, Limits) {
  EXPECT_LT(normalization_c_lambda(1e-8), 1e-8);
  EXPECT_NEAR(normalization_c_lambda(1.0 - 1e-9), 1.0 / kPi, 1e-8);
  EXPECT_THROW(normalization_c_lambda(0.0), std::domain_error);
  EXPECT_THROW(normalization_c_lambda(1.0), std::domain_error);
}

TEST(Stencil, DiagonalAtHalf) {
  const double c = normalization_c_lambda(0.5);
  const FracStencil s = FracStencil::build(0.5, 1.0, 8);
  EXPECT_NEAR(s.g0(), -8.0 * c, 1e-15);
  EXPECT_NEAR(diagonal_coefficient(0.5, c), 8.0 * c, 1e-15);
}

TEST(Stencil, FirstWeightAtHalf) {
  const double c = normalization_c_lambda(0.5);
  EXPECT_NEAR(weight_offdiag(0.5, c, 1.0, 1), 4.0 * c * (2.0 - std::sqrt(2.0)), 1e-15);
  EXPECT_THROW(weight_offdiag(0.5, c, 1.0, 0), std::invalid_argument);
}

TEST(Stencil, WeightsMatchQuadratureOracle) {
  for (double lambda : {0.1, 0.5, 0.9}) {
    const double c = normalization_c_lambda(lambda);
    for (std::int64_t m : {1, 2, 3, 7, 20, 50}) {
      const double closed = weight_offdiag(lambda, c, 1.0, m);
      const double oracle = oracle::offdiag_weight(lambda, c, m);
      EXPECT_NEAR(closed / oracle, 1.0, 1e-8) << "lambda " << lambda << " m " << m;
    }
  }
}

TEST(Stencil, ScalingInDx) {
  const double c = normalization_c_lambda(0.3);
  EXPECT_NEAR(weight_offdiag(0.3, c, 0.01, 4) / weight_offdiag(0.3, c, 1.0, 4), std::pow(0.01, 0.7), 1e-14);
}

TEST(Stencil, PositiveDecreasingWithKernelAsymptotics) {
  for (double lambda : {0.1, 0.5, 0.9}) {
    const FracStencil s = FracStencil::build(lambda, 1.0, 4000);
    const auto g = s.tail_weights();
    for (std::size_t m = 0; m < g.size(); ++m) {
      EXPECT_GT(g[m], 0.0);
      if (m > 0) {
        EXPECT_LT(g[m], g[m - 1]);
      }
    }
    // Far weights behave like c / m^{1+lambda}.
    EXPECT_NEAR(g.back() * std::pow(4000.0, 1.0 + lambda) / s.c_lambda(), 1.0, 1e-5);
  }
}

TEST(Stencil, RowSumWithTail) {
  for (double lambda : {0.1, 0.5, 0.9}) {
    for (double dx : {1.0, 0.01}) {
      for (std::size_t M : {1u, 10u, 1000u}) {
        const FracStencil s = FracStencil::build(lambda, dx, M);
        EXPECT_LE(std::abs(s.truncated_row_sum() + 2.0 * s.tail_sum()), 1e-10);
      }
    }
  }
}

TEST(Stencil, TailIsTheSumOfTheMissingWeights) {
  const double c = normalization_c_lambda(0.4);
  double direct = 0.0;
  for (std::int64_t m = 11; m <= 500; ++m) direct += weight_offdiag(0.4, c, 0.1, m);
  EXPECT_NEAR(weight_tail(0.4, c, 0.1, 10) - weight_tail(0.4, c, 0.1, 500), direct, 1e-13);
}

TEST(Stencil, SecondDifferenceStable) {
  // Compare against a long-double evaluation where cancellation is mild.
  for (double x : {1.0, 2.0, 10.0, 1e3}) {
    const long double lx = x;
    const long double ref = powl(lx + 1, 0.3L) - 2 * powl(lx, 0.3L) + powl(lx - 1, 0.3L);
    EXPECT_NEAR(second_difference_power(x, 0.3) / static_cast<double>(ref), 1.0, 1e-12);
  }
  EXPECT_LT(second_difference_power(1e8, 0.3), 0.0);
}

std::vector<double> random_vector(std::size_t n, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-1, 1);
  std::vector<double> v(n);
  for (auto& x : v) x = u(rng);
  return v;
}

TEST(Operator, IndicatorGivesColumn) {
  const FracStencil s = FracStencil::build(0.5, 0.1, 40);
  std::vector<double> u(41, 0.0);
  u[20] = 1.0;
  const auto g = fraclaw::apply(s, u);
  for (std::size_t i = 0; i < 41; ++i) {
    const auto m = static_cast<std::int64_t>(i) - 20;
    EXPECT_NEAR(g[i], s.weight(m) / 0.1, 1e-13);
  }
}

TEST(Operator, ConstantsOnPeriodicWindow) {
  const FracStencil s = FracStencil::build(0.5, 0.05, 16 * 60);
  const FractionalOperator op(s, 60, Boundary::periodic);
  const auto g = op.apply(std::vector<double>(60, 2.5));
  for (double v : g) EXPECT_NEAR(v, 0.0, 1e-12);
}

TEST(Operator, DenseMatchesFft) {
  for (Boundary b : {Boundary::zero_extension, Boundary::periodic}) {
    for (std::size_t n : {1u, 7u, 64u, 301u}) {
      const FracStencil s = FracStencil::build(0.7, 1.0 / static_cast<double>(n), b == Boundary::periodic ? 16 * n : n);
      const FractionalOperator op(s, n, b);
      const auto u = random_vector(n, static_cast<std::uint32_t>(n));
      const auto d = op.apply(u, MatvecPath::dense);
      const auto f = op.apply(u, MatvecPath::fft);
      double scale = 0.0;
      for (double v : d) scale = std::max(scale, std::abs(v));
      for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(d[i], f[i], 1e-12 * scale);
    }
  }
}

TEST(Operator, SizeMismatchThrows) {
  const FractionalOperator op(FracStencil::build(0.5, 0.1, 10), 10, Boundary::zero_extension);
  EXPECT_THROW(op.apply(std::vector<double>(9, 0.0)), std::invalid_argument);
}

TEST(Operator, SymmetricAndNonpositive) {
  for (Boundary b : {Boundary::zero_extension, Boundary::periodic}) {
    const std::size_t n = 50;
    const FracStencil s = FracStencil::build(0.4, 0.02, b == Boundary::periodic ? 16 * n : n);
    const FractionalOperator op(s, n, b);
    for (std::uint32_t seed = 0; seed < 50; ++seed) {
      const auto u = random_vector(n, seed);
      const auto v = random_vector(n, seed + 1000);
      const auto gu = op.apply(u);
      const auto gv = op.apply(v);
      double uv = 0.0, vu = 0.0, uu = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        uv += u[i] * gv[i];
        vu += v[i] * gu[i];
        uu += u[i] * gu[i];
      }
      EXPECT_NEAR(uv, vu, 1e-11);
      EXPECT_LE(uu, 1e-12);
    }
  }
}

TEST(Operator, L1InterpolationBound) {
  // dx sum |g<U>| <= c (2/(1-lambda) + 4/lambda) |U|_1^{1-lambda} |U|_BV^lambda,
  // with U zero outside the window.
  for (double lambda : {0.2, 0.5, 0.8}) {
    const std::size_t n = 80;
    const double dx = 0.025;
    const FracStencil s = FracStencil::build(lambda, dx, n);
    for (std::uint32_t seed = 0; seed < 20; ++seed) {
      const auto u = random_vector(n, seed);
      const auto g = fraclaw::apply(s, u);
      double l1g = 0.0, l1 = 0.0, bv = std::abs(u.front()) + std::abs(u.back());
      for (std::size_t i = 0; i < n; ++i) {
        l1g += dx * std::abs(g[i]);
        l1 += dx * std::abs(u[i]);
        if (i > 0) bv += std::abs(u[i] - u[i - 1]);
      }
      const double bound = s.c_lambda() * (2.0 / (1.0 - lambda) + 4.0 / lambda) * std::pow(l1, 1.0 - lambda) *
                           std::pow(bv, lambda);
      EXPECT_LE(l1g, bound);
    }
  }
}

TEST(Operator, PeriodicSymbol) {
  // On a period-1 window, cell averages of cos(2 pi j x) are eigenvectors with
  // eigenvalue approaching -(2 pi j)^lambda.
  const double lambda = 0.6;
  for (int j : {1, 3}) {
    const double xi = 2 * kPi * j;
    double prev = 0.0;
    for (std::size_t n : {64u, 256u, 1024u}) {
      const double dx = 1.0 / static_cast<double>(n);
      const FracStencil s = FracStencil::build(lambda, dx, 16 * n);
      const FractionalOperator op(s, n, Boundary::periodic);
      std::vector<double> u(n);
      for (std::size_t i = 0; i < n; ++i)
        u[i] = (std::sin(xi * dx * static_cast<double>(i + 1)) - std::sin(xi * dx * static_cast<double>(i))) / (xi * dx);
      const auto g = op.apply(u);
      double err = 0.0;
      for (std::size_t i = 0; i < n; ++i) err = std::max(err, std::abs(g[i] + std::pow(xi, lambda) * u[i]));
      err /= std::pow(xi, lambda);
      if (prev > 0.0) {
        EXPECT_GT(std::log2(prev / err) / 2.0, 1.0 - lambda);
      }
      prev = err;
    }
    EXPECT_LT(prev, 2e-3);
  }
}

TEST(StencilIo, RoundTripIsBitExact) {
  const FracStencil s = FracStencil::build(0.37, 1.0 / 300.0, 300);
  std::stringstream buf;
  write_stencil_csv(buf, s);
  const FracStencil r = read_stencil_csv(buf);
  EXPECT_EQ(r.lambda(), s.lambda());
  EXPECT_EQ(r.dx(), s.dx());
  EXPECT_EQ(r.c_lambda(), s.c_lambda());
  EXPECT_EQ(r.g0(), s.g0());
  ASSERT_EQ(r.m_trunc(), s.m_trunc());
  for (std::size_t m = 0; m < s.m_trunc(); ++m) EXPECT_EQ(r.tail_weights()[m], s.tail_weights()[m]);
  EXPECT_EQ(r.tail_sum(), s.tail_sum());
}

TEST(StencilIo, RejectsMalformed) {
  auto load = [](const std::string& text) {
    std::istringstream in(text);
    return read_stencil_csv(in);
  };
  EXPECT_THROW(load(""), std::runtime_error);
  EXPECT_THROW(load("m,G_m\n0,1\n"), std::runtime_error);
  std::stringstream good;
  write_stencil_csv(good, FracStencil::build(0.5, 1.0, 3));
  std::string text = good.str();
  const auto pos = text.find("\n2,");
  ASSERT_NE(pos, std::string::npos);
  std::string gap = text;
  gap.replace(pos + 1, 1, "5");
  EXPECT_THROW(load(gap), std::runtime_error);
  std::string bad_diag = text;
  const auto d0 = bad_diag.find("\n0,");
  bad_diag.replace(d0 + 3, 1, "9");
  EXPECT_THROW(load(bad_diag), std::runtime_error);
  EXPECT_THROW(load_stencil("/nonexistent/stencil.csv"), std::runtime_error);
}

}  // namespace
}  // namespace fraclaw
