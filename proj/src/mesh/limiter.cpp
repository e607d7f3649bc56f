#include "fraclaw/mesh/limiter.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fraclaw {

double minmod(double a, double b, double c) noexcept {
  if (a > 0.0 && b > 0.0 && c > 0.0) return std::min({a, b, c});
  if (a < 0.0 && b < 0.0 && c < 0.0) return std::max({a, b, c});
  return 0.0;
}

double tvb_minmod(double a, double b, double c, double threshold) noexcept {
  if (std::abs(a) <= threshold) return a;
  return minmod(a, b, c);
}

void tvb_limit_in_place(PolyState& state, double m_param, Boundary boundary) {
  if (state.degree() < 1) throw std::invalid_argument("tvb_limit: requires degree >= 1");
  const std::size_t n = state.n_cells();
  const double threshold = m_param * state.grid().dx() * state.grid().dx();
  const auto avg = state.mode(0);

  auto neighbour = [&](std::ptrdiff_t j) -> double {
    const auto nn = static_cast<std::ptrdiff_t>(n);
    if (j >= 0 && j < nn) return avg[static_cast<std::size_t>(j)];
    if (boundary == Boundary::periodic) return avg[static_cast<std::size_t>((j % nn + nn) % nn)];
    return 0.0;
  };

  for (std::size_t i = 0; i < n; ++i) {
    const auto ii = static_cast<std::ptrdiff_t>(i);
    const double forward = neighbour(ii + 1) - avg[i];
    const double backward = avg[i] - neighbour(ii - 1);
    const double slope = state(1, i);
    const double limited = tvb_minmod(slope, forward, backward, threshold);
    if (limited != slope) {
      state(1, i) = limited;
      if (state.degree() >= 2) state(2, i) = 0.0;
    }
  }
}

PolyState tvb_limit(const PolyState& state, double m_param, Boundary boundary) {
  PolyState out = state;
  tvb_limit_in_place(out, m_param, boundary);
  return out;
}

}  // namespace fraclaw
