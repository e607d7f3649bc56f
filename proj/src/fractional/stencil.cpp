#include "fraclaw/fractional/stencil.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fraclaw {
namespace {

void check_lambda(double lambda) {
  if (!(lambda > 0.0 && lambda < 1.0)) throw std::domain_error("fractional order lambda must lie in (0, 1)");
}

// (M+1)^a - M^a.
double forward_difference_power(double m, double a) {
  if (m == 0.0) return 1.0;
  return std::pow(m, a) * std::expm1(a * std::log1p(1.0 / m));
}

}  // namespace

double normalization_c_lambda(double lambda) {
  check_lambda(lambda);
  return lambda * std::exp2(lambda - 1.0) * std::tgamma(0.5 * (1.0 + lambda)) /
         (std::sqrt(std::numbers::pi) * std::tgamma(1.0 - 0.5 * lambda));
}

double diagonal_coefficient(double lambda, double c_lambda) {
  check_lambda(lambda);
  return c_lambda * (2.0 / (1.0 - lambda) + 2.0 / lambda);
}

double second_difference_power(double x, double e) {
  if (x < 8.0) return std::pow(x + 1.0, e) - 2.0 * std::pow(x, e) + std::pow(x - 1.0, e);
  // x^e [(1+h)^e - 2 + (1-h)^e] = 2 x^e sum_{j>=1} binom(e, 2j) h^{2j}, h = 1/x.
  const double h2 = 1.0 / (x * x);
  double binom = 1.0;
  double hp = 1.0;
  double sum = 0.0;
  for (int n = 1; n <= 60; ++n) {
    binom *= (e - n + 1.0) / n;
    if (n % 2 == 1) continue;
    hp *= h2;
    const double term = binom * hp;
    sum += term;
    if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
  }
  return 2.0 * std::pow(x, e) * sum;
}

double weight_offdiag(double lambda, double c_lambda, double dx, std::int64_t m) {
  check_lambda(lambda);
  if (m < 1) throw std::invalid_argument("weight_offdiag: offset must be >= 1");
  const double a = 1.0 - lambda;
  const double scale = c_lambda * std::pow(dx, a) / (lambda * a);
  return -scale * second_difference_power(static_cast<double>(m), a);
}

double weight_tail(double lambda, double c_lambda, double dx, std::size_t m_trunc) {
  check_lambda(lambda);
  const double a = 1.0 - lambda;
  const double scale = c_lambda * std::pow(dx, a) / (lambda * a);
  return scale * forward_difference_power(static_cast<double>(m_trunc), a);
}

FracStencil::FracStencil(double lambda, double c_lambda, double dx, std::vector<double> g_tail)
    : lambda_(lambda),
      c_lambda_(c_lambda),
      d_lambda_(diagonal_coefficient(lambda, c_lambda)),
      dx_(dx),
      g0_(-d_lambda_ * std::pow(dx, 1.0 - lambda)),
      tail_sum_(weight_tail(lambda, c_lambda, dx, g_tail.size())),
      g_tail_(std::move(g_tail)) {}

FracStencil FracStencil::build(double lambda, double dx, std::size_t m_trunc) {
  check_lambda(lambda);
  if (!(dx > 0.0)) throw std::invalid_argument("FracStencil::build: dx must be positive");
  if (m_trunc < 1) throw std::invalid_argument("FracStencil::build: m_trunc must be >= 1");
  const double c = normalization_c_lambda(lambda);
  std::vector<double> g(m_trunc);
  for (std::size_t m = 1; m <= m_trunc; ++m) g[m - 1] = weight_offdiag(lambda, c, dx, static_cast<std::int64_t>(m));
  return FracStencil(lambda, c, dx, std::move(g));
}

FracStencil stencil_from_weights(double lambda, double c_lambda, double dx, std::vector<double> g_tail) {
  check_lambda(lambda);
  if (g_tail.empty()) throw std::invalid_argument("stencil_from_weights: no off-diagonal weights");
  return FracStencil(lambda, c_lambda, dx, std::move(g_tail));
}

double FracStencil::weight(std::int64_t m) const noexcept {
  const auto am = static_cast<std::size_t>(m < 0 ? -m : m);
  if (am == 0) return g0_;
  return am <= g_tail_.size() ? g_tail_[am - 1] : 0.0;
}

double FracStencil::truncated_row_sum() const noexcept {
  // Small weights first.
  double s = 0.0;
  for (auto it = g_tail_.rbegin(); it != g_tail_.rend(); ++it) s += *it;
  return g0_ + 2.0 * s;
}

}  // namespace fraclaw
