#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "fraclaw/fractional/block_toeplitz.hpp"
#include "fraclaw/fractional/stencil.hpp"
#include "fraclaw/mesh/grid.hpp"

namespace fraclaw {

/// Coupling integral int_{I_0} phi_q g[phi_{p,m}] dx on the unit grid (dx = 1)
/// with c_lambda = 1. Scaled entries are c_lambda dx^{1-lambda} times this.
///
/// Offsets m >= 1 reduce to a one-dimensional integral over the distance
/// between the two cells whose polynomial weight is built in closed form; the
/// part touching the kernel singularity uses exact moments, the rest Gauss
/// quadrature. The self cell (m = 0) uses the symmetric bilinear form.
/// Negative offsets follow from W[-m][q][p] = W[m][p][q].
double reference_coupling(double lambda, std::int64_t m, int q, int p);

/// Nonlocal DG coupling table W[m][q][p] = int_{I_0} phi_{q,0} g[phi_{p,m}] dx
/// for |m| <= m_trunc and q, p = 0..k.
class DGWeightTable {
 public:
  static DGWeightTable build(double lambda, double dx, int degree, std::size_t m_trunc);

  int degree() const noexcept { return degree_; }
  std::size_t m_trunc() const noexcept { return m_trunc_; }
  double lambda() const noexcept { return lambda_; }
  double dx() const noexcept { return dx_; }
  double c_lambda() const noexcept { return c_lambda_; }

  /// W[m][q][p], zero beyond the truncation.
  double operator()(std::int64_t m, int q, int p) const noexcept;

 private:
  DGWeightTable() = default;

  int degree_ = 0;
  std::size_t m_trunc_ = 0;
  double lambda_ = 0.0;
  double dx_ = 0.0;
  double c_lambda_ = 0.0;
  std::vector<double> w_;
};

/// Applies the nonlocal DG term
///   out[q][i] = sum_m sum_p W[m][q][p] U[p][i+m]
/// to mode-major coefficient vectors on a window of n cells.
class DGNonlocalOperator {
 public:
  /// For periodic windows the (0,0) block is the folded stencil (which
  /// carries the far field); other blocks fold the table up to its truncation.
  DGNonlocalOperator(const DGWeightTable& table, const FracStencil& stencil, std::size_t n_cells, Boundary boundary);

  int degree() const noexcept { return op_.block() - 1; }
  std::size_t n_cells() const noexcept { return op_.n_cells(); }
  double coefficient(std::int64_t offset, int q, int p) const noexcept { return op_.coefficient(offset, q, p); }

  void apply(std::span<const double> coeffs, std::span<double> out, MatvecPath path = MatvecPath::automatic) const;

 private:
  BlockToeplitz op_;
};

}  // namespace fraclaw
