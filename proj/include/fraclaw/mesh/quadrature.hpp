#pragma once

#include <cstddef>
#include <vector>

namespace fraclaw {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

inline constexpr std::size_t kMaxGaussNodes = 64;

/// n-point Gauss-Legendre rule on [-1, 1], 1 <= n <= kMaxGaussNodes.
/// Rules are computed once and cached; the reference stays valid for the
/// lifetime of the program.
const QuadratureRule& gauss_legendre(std::size_t n);

/// Integrates f over [a, b] with the n-point Gauss-Legendre rule.
template <class F>
double integrate_gauss(F&& f, double a, double b, std::size_t n) {
  const auto& rule = gauss_legendre(n);
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double sum = 0.0;
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) sum += rule.weights[k] * f(mid + half * rule.nodes[k]);
  return half * sum;
}

}  // namespace fraclaw
