#include "fraclaw/mesh/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fraclaw {
namespace {

QuadratureRule compute_rule(std::size_t n) {
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    // Chebyshev-like initial guess, then Newton on P_n.
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const double kk = static_cast<double>(k);
        const double p2 = ((2.0 * kk - 1.0) * x * p1 - (kk - 1.0) * p0) / kk;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) {
        p1 = x;
        p0 = 1.0;
      }
      dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    if (n == 1) {
      x = 0.0;
      dp = 1.0;
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n == 1) rule.weights[0] = 2.0;
  return rule;
}

std::vector<QuadratureRule> build_table() {
  std::vector<QuadratureRule> table;
  table.reserve(kMaxGaussNodes + 1);
  table.emplace_back();
  for (std::size_t n = 1; n <= kMaxGaussNodes; ++n) table.push_back(compute_rule(n));
  return table;
}

}  // namespace

const QuadratureRule& gauss_legendre(std::size_t n) {
  static const std::vector<QuadratureRule> table = build_table();
  if (n == 0 || n > kMaxGaussNodes) throw std::invalid_argument("gauss_legendre: unsupported node count");
  return table[n];
}

}  // namespace fraclaw
