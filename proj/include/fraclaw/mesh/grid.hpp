#pragma once

#include <cstddef>

namespace fraclaw {

/// How values outside the computational window are treated.
///  - zero_extension: the solution is identically zero outside the window.
///  - periodic: the window is one period of a periodic solution.
enum class Boundary { zero_extension, periodic };

/// Uniform 1D grid on [x_left, x_right) with n_cells cells.
/// Cell i spans [x_left + i*dx, x_left + (i+1)*dx).
class GridSpec {
 public:
  GridSpec(double x_left, double x_right, std::size_t n_cells);

  double x_left() const noexcept { return x_left_; }
  double x_right() const noexcept { return x_right_; }
  double length() const noexcept { return x_right_ - x_left_; }
  std::size_t n_cells() const noexcept { return n_cells_; }
  double dx() const noexcept { return dx_; }

  double cell_left(std::size_t i) const noexcept { return x_left_ + static_cast<double>(i) * dx_; }
  double cell_right(std::size_t i) const noexcept { return cell_left(i) + dx_; }
  double cell_center(std::size_t i) const noexcept { return cell_left(i) + 0.5 * dx_; }

  /// Index of the cell containing x. The right domain end belongs to the last cell.
  /// Throws std::out_of_range outside [x_left, x_right].
  std::size_t cell_of(double x) const;

  /// Maps x in cell i to the reference coordinate xi in [-1, 1].
  double to_reference(std::size_t i, double x) const noexcept {
    return 2.0 * (x - cell_left(i)) / dx_ - 1.0;
  }
  double from_reference(std::size_t i, double xi) const noexcept {
    return cell_left(i) + 0.5 * (xi + 1.0) * dx_;
  }

  bool operator==(const GridSpec& other) const noexcept = default;

 private:
  double x_left_;
  double x_right_;
  std::size_t n_cells_;
  double dx_;
};

}  // namespace fraclaw
