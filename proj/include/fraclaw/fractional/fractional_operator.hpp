#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "fraclaw/fractional/block_toeplitz.hpp"
#include "fraclaw/fractional/stencil.hpp"
#include "fraclaw/mesh/grid.hpp"

namespace fraclaw {

/// Circulant weights C_d, d = 0..n-1, of the stencil wrapped onto a periodic
/// window of n cells: C_d = sum over m = d (mod n) of G_|m|. Offsets up to the
/// stencil truncation are summed directly, the remainder by Euler-Maclaurin
/// on the closed-form weights, and C_0 is set so the weights sum to zero.
std::vector<double> periodic_weights(const FracStencil& stencil, std::size_t n_cells);

/// The cell-averaged fractional Laplacian g<U>_i = (1/dx) sum_j G_{|i-j|} U_j
/// on a window of n cells. Values outside the window are zero
/// (zero_extension) or periodic copies (periodic).
class FractionalOperator {
 public:
  FractionalOperator(const FracStencil& stencil, std::size_t n_cells, Boundary boundary);

  const FracStencil& stencil() const noexcept { return stencil_; }
  std::size_t n_cells() const noexcept { return op_.n_cells(); }
  Boundary boundary() const noexcept { return op_.boundary(); }

  /// Coefficient of U_{i+offset} in g<U>_i.
  double coefficient(std::int64_t offset) const noexcept { return op_.coefficient(offset, 0, 0); }
  double diagonal() const noexcept { return coefficient(0); }

  /// Throws std::invalid_argument when u does not have n_cells entries.
  std::vector<double> apply(std::span<const double> u, MatvecPath path = MatvecPath::automatic) const;
  void apply(std::span<const double> u, std::span<double> out, MatvecPath path = MatvecPath::automatic) const;

 private:
  FracStencil stencil_;
  BlockToeplitz op_;
};

/// One-shot g<U> without keeping the operator.
std::vector<double> apply(const FracStencil& stencil, std::span<const double> u,
                          Boundary boundary = Boundary::zero_extension, MatvecPath path = MatvecPath::automatic);

}  // namespace fraclaw
