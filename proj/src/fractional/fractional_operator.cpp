#include "fraclaw/fractional/fractional_operator.hpp"

#include <cmath>
#include <stdexcept>

namespace fraclaw {
namespace {

// sum_{k>=0} G(m0 + k n) by Euler-Maclaurin on g(k) = G(m0 + k n), using
// G(m) = -K sd(m, a) with K = c dx^a / (lambda a) and a = 1 - lambda.
double far_field_sum(const FracStencil& s, double m0, double n) {
  const double lambda = s.lambda();
  const double a = 1.0 - lambda;
  const double K = s.c_lambda() * std::pow(s.dx(), a) / (lambda * a);
  const double integral = K * second_difference_power(m0, a + 1.0) / ((a + 1.0) * n);
  const double g0 = -K * second_difference_power(m0, a);
  const double g1 = -n * K * a * second_difference_power(m0, a - 1.0);
  const double g3 = -n * n * n * K * a * (a - 1.0) * (a - 2.0) * second_difference_power(m0, a - 3.0);
  return integral + 0.5 * g0 - g1 / 12.0 + g3 / 720.0;
}

}  // namespace

std::vector<double> periodic_weights(const FracStencil& stencil, std::size_t n_cells) {
  if (n_cells == 0) throw std::invalid_argument("periodic_weights: empty window");
  const auto n = static_cast<std::int64_t>(n_cells);
  const auto m_trunc = static_cast<std::int64_t>(stencil.m_trunc());
  std::vector<double> c(n_cells, 0.0);
  // Smallest weights first for a cleaner sum.
  for (std::int64_t m = m_trunc; m >= 1; --m) {
    const double g = stencil.weight(m);
    c[static_cast<std::size_t>(m % n)] += g;
    c[static_cast<std::size_t>((n - m % n) % n)] += g;
  }
  for (std::int64_t r = 0; r < n; ++r) {
    // First offset beyond the truncation with m = r (mod n).
    const std::int64_t first = m_trunc + 1 + (((r - (m_trunc + 1)) % n) + n) % n;
    const double far = far_field_sum(stencil, static_cast<double>(first), static_cast<double>(n));
    c[static_cast<std::size_t>(r)] += far;
    c[static_cast<std::size_t>((n - r) % n)] += far;
  }
  double off = 0.0;
  for (std::int64_t d = n - 1; d >= 1; --d) off += c[static_cast<std::size_t>(d)];
  c[0] = -off;
  return c;
}

FractionalOperator::FractionalOperator(const FracStencil& stencil, std::size_t n_cells, Boundary boundary)
    : stencil_(stencil),
      op_([&] {
        const double inv_dx = 1.0 / stencil.dx();
        if (boundary == Boundary::periodic) {
          auto c = periodic_weights(stencil, n_cells);
          return BlockToeplitz(n_cells, 1, boundary,
                               [&](std::int64_t d, int, int) { return inv_dx * c[static_cast<std::size_t>(d)]; });
        }
        return BlockToeplitz(n_cells, 1, boundary,
                             [&](std::int64_t m, int, int) { return inv_dx * stencil.weight(m); });
      }()) {}

std::vector<double> FractionalOperator::apply(std::span<const double> u, MatvecPath path) const {
  return op_.apply(u, path);
}

void FractionalOperator::apply(std::span<const double> u, std::span<double> out, MatvecPath path) const {
  op_.apply(u, out, path);
}

std::vector<double> apply(const FracStencil& stencil, std::span<const double> u, Boundary boundary,
                          MatvecPath path) {
  return FractionalOperator(stencil, u.size(), boundary).apply(u, path);
}

}  // namespace fraclaw
