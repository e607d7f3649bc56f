#include "fraclaw/fractional/dg_weights.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "fraclaw/fractional/fractional_operator.hpp"
#include "fraclaw/mesh/legendre.hpp"
#include "fraclaw/mesh/polynomial.hpp"
#include "fraclaw/mesh/quadrature.hpp"

namespace fraclaw {
namespace {

constexpr std::size_t kGaussNodes = 20;

double binomial(int n, int r) {
  double b = 1.0;
  for (int k = 1; k <= r; ++k) b = b * (n - r + k) / k;
  return b;
}

// Bivariate polynomial sum c[i][j] s^i v^j.
struct Bivariate {
  std::vector<std::vector<double>> c;

  void add(std::size_t i, std::size_t j, double value) {
    if (c.size() <= i) c.resize(i + 1);
    if (c[i].size() <= j) c[i].resize(j + 1, 0.0);
    c[i][j] += value;
  }

  Bivariate operator*(const Bivariate& o) const {
    Bivariate r;
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = 0; j < c[i].size(); ++j)
        for (std::size_t k = 0; k < o.c.size(); ++k)
          for (std::size_t l = 0; l < o.c[k].size(); ++l) r.add(i + k, j + l, c[i][j] * o.c[k][l]);
    return r;
  }

  // int_{lo(v)}^{hi(v)} (.) ds with affine limits lo = lo0 + lo1 v, hi = hi0 + hi1 v.
  Polynomial integrate_s(double lo0, double lo1, double hi0, double hi1) const {
    Polynomial result{0.0};
    const Polynomial lo{lo0, lo1};
    const Polynomial hi{hi0, hi1};
    for (std::size_t i = 0; i < c.size(); ++i) {
      Polynomial hi_pow{1.0};
      Polynomial lo_pow{1.0};
      for (std::size_t k = 0; k <= i; ++k) {
        hi_pow = hi_pow * hi;
        lo_pow = lo_pow * lo;
      }
      const Polynomial bracket = (hi_pow - lo_pow) * (1.0 / static_cast<double>(i + 1));
      for (std::size_t j = 0; j < c[i].size(); ++j) {
        std::vector<double> vj(j + 1, 0.0);
        vj[j] = c[i][j];
        result += Polynomial(std::move(vj)) * bracket;
      }
    }
    return result;
  }
};

// Legendre polynomial of cell [0, 1] as a polynomial in the physical coordinate.
Polynomial cell_legendre(int p) { return Polynomial::legendre(p).compose_affine(2.0, -1.0); }

// A(s) B(s + v) for univariate A, B.
Bivariate product_shifted(const Polynomial& a, const Polynomial& b) {
  Bivariate r;
  for (int i = 0; i <= a.degree(); ++i) {
    for (int n = 0; n <= b.degree(); ++n) {
      for (int k = 0; k <= n; ++k) {
        r.add(static_cast<std::size_t>(i + k), static_cast<std::size_t>(n - k),
              a.coefficient(i) * b.coefficient(n) * binomial(n, k));
      }
    }
  }
  return r;
}

// (A(x + u) - A(x)) / u as a polynomial in (x, u).
Bivariate divided_difference(const Polynomial& a) {
  Bivariate r;
  for (int n = 1; n <= a.degree(); ++n)
    for (int k = 0; k < n; ++k)
      r.add(static_cast<std::size_t>(k), static_cast<std::size_t>(n - k - 1), a.coefficient(n) * binomial(n, k));
  r.add(0, 0, 0.0);
  return r;
}

// sum_n c_n / (n + shift): int_0^1 u^{shift-1} rho(u) du for rho = sum c_n u^n.
double power_moments(const Polynomial& rho, double shift, int first = 0) {
  double s = 0.0;
  for (int n = first; n <= rho.degree(); ++n) s += rho.coefficient(n) / (n + shift);
  return s;
}

double self_coupling(double lambda, int q, int p) {
  const Polynomial a = cell_legendre(q);
  const Polynomial b = cell_legendre(p);
  // Pairs inside the cell: 2 int_0^1 u^{1-lambda} int_0^{1-u} Phi Psi dx du.
  const Bivariate dd = divided_difference(a) * divided_difference(b);
  const Polynomial rho = dd.integrate_s(0.0, 0.0, 1.0, -1.0);
  const double inner = 2.0 * power_moments(rho, 2.0 - lambda);
  // Pairs with one point outside: int_0^1 a b (x^{-lambda} + (1-x)^{-lambda}) / lambda dx.
  const Polynomial ab = a * b;
  const double outer =
      (power_moments(ab, 1.0 - lambda) + power_moments(ab.compose_affine(-1.0, 1.0), 1.0 - lambda)) / lambda;
  return -0.5 * inner - outer;
}

struct DistanceProfiles {
  Polynomial near;  // v in [-1, 0]
  Polynomial far;   // v in [0, 1]
};

// Cells [0,1] (test, degree q) and [m, m+1] (trial, degree p); distance t - s = m + v.
DistanceProfiles distance_profiles(int q, int p) {
  const Bivariate r = product_shifted(cell_legendre(q), cell_legendre(p));
  return {r.integrate_s(0.0, -1.0, 1.0, 0.0), r.integrate_s(0.0, 0.0, 1.0, -1.0)};
}

double offset_coupling(double lambda, std::int64_t m, const DistanceProfiles& prof) {
  const double md = static_cast<double>(m);
  auto kernel = [&](double v) { return std::pow(md + v, -1.0 - lambda); };
  double near = 0.0;
  if (m == 1) {
    // w = 1 + v; the profile vanishes at w = 0, leaving integrable w^{n-1-lambda}.
    near = power_moments(prof.near.compose_affine(1.0, -1.0), -lambda, 1);
  } else {
    near = integrate_gauss([&](double v) { return kernel(v) * prof.near(v); }, -1.0, 0.0, kGaussNodes);
  }
  const double far = integrate_gauss([&](double v) { return kernel(v) * prof.far(v); }, 0.0, 1.0, kGaussNodes);
  return near + far;
}

void check_indices(int q, int p) {
  if (q < 0 || q > kMaxDegree || p < 0 || p > kMaxDegree)
    throw std::invalid_argument("DG coupling: basis degree outside [0, 2]");
}

}  // namespace

double reference_coupling(double lambda, std::int64_t m, int q, int p) {
  if (!(lambda > 0.0 && lambda < 1.0)) throw std::domain_error("fractional order lambda must lie in (0, 1)");
  check_indices(q, p);
  if (m == 0) return self_coupling(lambda, q, p);
  if (m < 0) return reference_coupling(lambda, -m, p, q);
  return offset_coupling(lambda, m, distance_profiles(q, p));
}

DGWeightTable DGWeightTable::build(double lambda, double dx, int degree, std::size_t m_trunc) {
  if (degree < 0 || degree > kMaxDegree) throw std::invalid_argument("DGWeightTable: degree outside [0, 2]");
  if (!(dx > 0.0)) throw std::invalid_argument("DGWeightTable: dx must be positive");
  DGWeightTable t;
  t.degree_ = degree;
  t.m_trunc_ = m_trunc;
  t.lambda_ = lambda;
  t.dx_ = dx;
  t.c_lambda_ = normalization_c_lambda(lambda);
  const int b = degree + 1;
  const auto bb = static_cast<std::size_t>(b * b);
  const auto M = static_cast<std::int64_t>(m_trunc);
  t.w_.assign((2 * m_trunc + 1) * bb, 0.0);
  const double scale = t.c_lambda_ * std::pow(dx, 1.0 - lambda);

  auto slot = [&](std::int64_t m, int q, int p) -> double& {
    return t.w_[static_cast<std::size_t>(m + M) * bb + static_cast<std::size_t>(q * b + p)];
  };
  for (int q = 0; q < b; ++q) {
    for (int p = 0; p < b; ++p) {
      slot(0, q, p) = scale * self_coupling(lambda, q, p);
      const DistanceProfiles prof = distance_profiles(q, p);
      for (std::int64_t m = 1; m <= M; ++m) {
        const double w = scale * offset_coupling(lambda, m, prof);
        slot(m, q, p) = w;
        slot(-m, p, q) = w;
      }
    }
  }
  return t;
}

double DGWeightTable::operator()(std::int64_t m, int q, int p) const noexcept {
  const auto M = static_cast<std::int64_t>(m_trunc_);
  if (m < -M || m > M || q < 0 || p < 0 || q > degree_ || p > degree_) return 0.0;
  const int b = degree_ + 1;
  return w_[static_cast<std::size_t>(m + M) * static_cast<std::size_t>(b * b) + static_cast<std::size_t>(q * b + p)];
}

DGNonlocalOperator::DGNonlocalOperator(const DGWeightTable& table, const FracStencil& stencil, std::size_t n_cells,
                                       Boundary boundary)
    : op_([&] {
        const int b = table.degree() + 1;
        if (boundary == Boundary::zero_extension) {
          return BlockToeplitz(n_cells, b, boundary,
                               [&](std::int64_t m, int q, int p) { return table(m, q, p); });
        }
        const auto n = static_cast<std::int64_t>(n_cells);
        const auto M = static_cast<std::int64_t>(table.m_trunc());
        const auto bb = static_cast<std::size_t>(b * b);
        std::vector<double> folded(static_cast<std::size_t>(n) * bb, 0.0);
        for (int q = 0; q < b; ++q) {
          for (int p = 0; p < b; ++p) {
            const auto qp = static_cast<std::size_t>(q * b + p);
            if (q == 0 && p == 0) {
              const auto c = periodic_weights(stencil, n_cells);
              for (std::int64_t d = 0; d < n; ++d) folded[static_cast<std::size_t>(d) * bb] = c[static_cast<std::size_t>(d)];
              continue;
            }
            for (std::int64_t m = -M; m <= M; ++m)
              folded[static_cast<std::size_t>(((m % n) + n) % n) * bb + qp] += table(m, q, p);
            if (q == 0 || p == 0) {
              // Constants lie in the kernel: columns/rows against phi_0 sum to zero.
              double off = 0.0;
              for (std::int64_t d = 1; d < n; ++d) off += folded[static_cast<std::size_t>(d) * bb + qp];
              folded[qp] = -off;
            }
          }
        }
        return BlockToeplitz(n_cells, b, boundary, [&, bb](std::int64_t d, int q, int p) {
          return folded[static_cast<std::size_t>(d) * bb + static_cast<std::size_t>(q * b + p)];
        });
      }()) {}

void DGNonlocalOperator::apply(std::span<const double> coeffs, std::span<double> out, MatvecPath path) const {
  op_.apply(coeffs, out, path);
}

}  // namespace fraclaw
