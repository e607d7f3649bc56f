#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fraclaw/mesh/grid.hpp"

namespace fraclaw {

/// DG coefficients U_{p,i} of a piecewise polynomial of degree k on a grid.
/// On cell i the solution is sum_p U_{p,i} P_p(xi), xi the reference coordinate.
/// Storage is mode-major: all cells of mode 0, then mode 1, ...
class PolyState {
 public:
  PolyState(GridSpec grid, int degree);
  PolyState(GridSpec grid, int degree, std::vector<double> coeffs);

  const GridSpec& grid() const noexcept { return grid_; }
  int degree() const noexcept { return degree_; }
  std::size_t n_cells() const noexcept { return grid_.n_cells(); }
  std::size_t n_modes() const noexcept { return static_cast<std::size_t>(degree_) + 1; }

  double& operator()(int p, std::size_t i) noexcept { return coeffs_[index(p, i)]; }
  double operator()(int p, std::size_t i) const noexcept { return coeffs_[index(p, i)]; }

  std::span<double> mode(int p) noexcept { return {coeffs_.data() + index(p, 0), n_cells()}; }
  std::span<const double> mode(int p) const noexcept { return {coeffs_.data() + index(p, 0), n_cells()}; }
  std::span<const double> averages() const noexcept { return mode(0); }

  std::span<double> data() noexcept { return coeffs_; }
  std::span<const double> data() const noexcept { return coeffs_; }

  /// Value at the right end of cell i (xi = +1).
  double right_trace(std::size_t i) const noexcept;
  /// Value at the left end of cell i (xi = -1).
  double left_trace(std::size_t i) const noexcept;
  /// Value at reference coordinate xi of cell i.
  double eval_in_cell(std::size_t i, double xi) const;

  /// this += a * other (same grid and degree).
  PolyState& axpy(double a, const PolyState& other);
  PolyState& scale(double a);

  /// Throws fraclaw::NumericalError naming the first non-finite coefficient.
  void check_finite(const char* context) const;

 private:
  std::size_t index(int p, std::size_t i) const noexcept {
    return static_cast<std::size_t>(p) * grid_.n_cells() + i;
  }

  GridSpec grid_;
  int degree_;
  std::vector<double> coeffs_;
};

}  // namespace fraclaw
