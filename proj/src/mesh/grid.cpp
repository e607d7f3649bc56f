#include "fraclaw/mesh/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fraclaw {

GridSpec::GridSpec(double x_left, double x_right, std::size_t n_cells)
    : x_left_(x_left), x_right_(x_right), n_cells_(n_cells), dx_(0.0) {
  if (n_cells == 0) throw std::invalid_argument("GridSpec: n_cells must be positive");
  if (!std::isfinite(x_left) || !std::isfinite(x_right) || !(x_right > x_left))
    throw std::invalid_argument("GridSpec: require finite x_left < x_right");
  dx_ = (x_right - x_left) / static_cast<double>(n_cells);
}

std::size_t GridSpec::cell_of(double x) const {
  if (!(x >= x_left_ && x <= x_right_))
    throw std::out_of_range("GridSpec::cell_of: x = " + std::to_string(x) + " outside the domain");
  auto i = static_cast<std::size_t>(std::floor((x - x_left_) / dx_));
  if (i >= n_cells_) i = n_cells_ - 1;
  // floor() can land one cell off when x sits on an interface.
  if (x < cell_left(i) && i > 0) --i;
  if (x >= cell_right(i) && i + 1 < n_cells_) ++i;
  return i;
}

}  // namespace fraclaw
