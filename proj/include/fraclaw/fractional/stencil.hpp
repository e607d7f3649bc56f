#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace fraclaw {

/// Normalisation c_lambda of the singular integral
///   g[phi](x) = c_lambda * int (phi(x+z) - phi(x)) / |z|^{1+lambda} dz
/// chosen so that g has Fourier symbol -|xi|^lambda:
///   c_lambda = lambda 2^{lambda-1} Gamma((1+lambda)/2) / (sqrt(pi) Gamma(1 - lambda/2)).
/// Throws std::domain_error unless 0 < lambda < 1.
double normalization_c_lambda(double lambda);

/// d_lambda = c_lambda (int_{|z|<1} |z|^{-lambda} dz + int_{|z|>1} |z|^{-1-lambda} dz)
///          = c_lambda (2/(1-lambda) + 2/lambda).
double diagonal_coefficient(double lambda, double c_lambda);

/// (x+1)^e - 2 x^e + (x-1)^e for x >= 1, evaluated without cancellation for large x.
double second_difference_power(double x, double e);

/// Off-diagonal cell weight G_m = int_{I_0} g[1_{I_m}] dx for m >= 1:
///   G_m = c_lambda dx^{1-lambda} / (lambda (1-lambda)) * (2 m^{1-lambda} - (m+1)^{1-lambda} - (m-1)^{1-lambda}).
/// Throws std::invalid_argument for m < 1.
double weight_offdiag(double lambda, double c_lambda, double dx, std::int64_t m);

/// Closed-form tail sum_{m > m_trunc} G_m (the series telescopes).
double weight_tail(double lambda, double c_lambda, double dx, std::size_t m_trunc);

/// Toeplitz weights of the cell-averaged fractional Laplacian
///   g<U>_i = (1/dx) sum_j G_{|i-j|} U_j
/// on a uniform grid, truncated at |i - j| <= m_trunc.
class FracStencil {
 public:
  static FracStencil build(double lambda, double dx, std::size_t m_trunc);

  double lambda() const noexcept { return lambda_; }
  double c_lambda() const noexcept { return c_lambda_; }
  double d_lambda() const noexcept { return d_lambda_; }
  double dx() const noexcept { return dx_; }
  std::size_t m_trunc() const noexcept { return g_tail_.size(); }

  /// Diagonal weight G_0 = -d_lambda dx^{1-lambda}.
  double g0() const noexcept { return g0_; }
  /// G_1 .. G_{m_trunc}.
  std::span<const double> tail_weights() const noexcept { return g_tail_; }
  /// G_{|m|}, zero beyond the truncation.
  double weight(std::int64_t m) const noexcept;

  /// sum_{m > m_trunc} G_m.
  double tail_sum() const noexcept { return tail_sum_; }
  /// g0 + 2 sum_{m=1}^{m_trunc} G_m.
  double truncated_row_sum() const noexcept;

 private:
  FracStencil(double lambda, double c_lambda, double dx, std::vector<double> g_tail);

  double lambda_;
  double c_lambda_;
  double d_lambda_;
  double dx_;
  double g0_;
  double tail_sum_;
  std::vector<double> g_tail_;

  friend FracStencil stencil_from_weights(double lambda, double c_lambda, double dx, std::vector<double> g_tail);
};

/// Reassembles a stencil from stored weights (used by the CSV loader).
FracStencil stencil_from_weights(double lambda, double c_lambda, double dx, std::vector<double> g_tail);

}  // namespace fraclaw
