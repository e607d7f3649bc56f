#include "fraclaw/mesh/projection.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "fraclaw/mesh/legendre.hpp"
#include "fraclaw/mesh/quadrature.hpp"

namespace fraclaw {

PolyState project_l2(const InitialData& u0, const GridSpec& grid, int degree, std::size_t nodes) {
  if (!u0.value) throw std::invalid_argument("project_l2: empty initial datum");
  PolyState state(grid, degree);
  const std::size_t n_nodes = nodes == 0 ? static_cast<std::size_t>(degree) + 2 : nodes;
  const auto& rule = gauss_legendre(n_nodes);

  std::vector<double> breaks = u0.breakpoints;
  std::sort(breaks.begin(), breaks.end());

  std::vector<double> pieces;
  for (std::size_t i = 0; i < grid.n_cells(); ++i) {
    const double a = grid.cell_left(i);
    const double b = grid.cell_right(i);
    pieces.assign({a});
    for (double x : breaks)
      if (x > a && x < b) pieces.push_back(x);
    pieces.push_back(b);

    double moments[kMaxDegree + 1] = {0.0, 0.0, 0.0};
    for (std::size_t s = 0; s + 1 < pieces.size(); ++s) {
      const double half = 0.5 * (pieces[s + 1] - pieces[s]);
      const double mid = 0.5 * (pieces[s + 1] + pieces[s]);
      for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
        const double x = mid + half * rule.nodes[k];
        const double v = u0.value(x);
        if (!std::isfinite(v)) {
          std::ostringstream msg;
          msg << "project_l2: non-finite initial value " << v << " at x = " << x;
          throw std::domain_error(msg.str());
        }
        const double xi = grid.to_reference(i, x);
        for (int q = 0; q <= degree; ++q) moments[q] += half * rule.weights[k] * v * legendre_eval(q, xi);
      }
    }
    for (int q = 0; q <= degree; ++q) state(q, i) = (2.0 * q + 1.0) / grid.dx() * moments[q];
  }
  return state;
}

PolyState project_l2(const std::function<double(double)>& u0, const GridSpec& grid, int degree,
                     std::size_t nodes) {
  return project_l2(InitialData{u0, {}}, grid, degree, nodes);
}

double reconstruct(const PolyState& state, double x) {
  const std::size_t i = state.grid().cell_of(x);
  return state.eval_in_cell(i, state.grid().to_reference(i, x));
}

double left_limit(const PolyState& state, double x) {
  const auto& grid = state.grid();
  std::size_t i = grid.cell_of(x);
  if (x <= grid.cell_left(i) && i > 0) --i;
  return state.eval_in_cell(i, std::min(1.0, grid.to_reference(i, x)));
}

double right_limit(const PolyState& state, double x) {
  const auto& grid = state.grid();
  std::size_t i = grid.cell_of(x);
  if (x >= grid.cell_right(i) && i + 1 < grid.n_cells()) ++i;
  return state.eval_in_cell(i, std::max(-1.0, grid.to_reference(i, x)));
}

}  // namespace fraclaw
