#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace fraclaw {

/// Periodic sampling grid: n_modes equispaced points x_j = x_left + j L / n
/// on one period [x_left, x_left + L). Frequencies xi_k = 2 pi k / L.
struct SpectralGrid {
  std::size_t n_modes;
  double x_left;
  double period;

  double x(std::size_t j) const noexcept { return x_left + period * static_cast<double>(j) / static_cast<double>(n_modes); }
  /// Signed frequency of FFT bin k.
  double xi(std::size_t k) const noexcept;
};

/// Grid whose period is `padding` times the window [a, b] and centred on it.
/// n_modes must be a power of two; padding >= 1.
SpectralGrid make_spectral_grid(double a, double b, std::size_t n_modes, double padding = 2.0);

/// Throws std::domain_error when the first or last sample exceeds 1e-8 max|u|.
void check_edge_decay(std::span<const double> samples);

/// Solution of u_t + c u_x = g_lambda[u] for periodic samples on the grid:
/// u_hat(xi, t) = u0_hat(xi) exp(-(i c xi + |xi|^lambda) t).
std::vector<double> spectral_linear_solve(const SpectralGrid& grid, std::span<const double> u0, double c,
                                          double lambda, double t);

/// Pure fractional heat flow, c = 0.
std::vector<double> fractional_heat_solve(const SpectralGrid& grid, std::span<const double> u0, double lambda,
                                          double t);

/// The same solution kept as a trigonometric polynomial, so it can be
/// evaluated pointwise and integrated over cells exactly. This is the
/// stand-in for data on the real line: u0 must decay at the edges of the
/// period (check_edge_decay).
class SpectralSolution {
 public:
  SpectralSolution(const SpectralGrid& grid, const std::function<double(double)>& u0, double c, double lambda,
                   double t);

  double operator()(double x) const;
  /// Exact mean over [a, b].
  double average(double a, double b) const;

 private:
  SpectralGrid grid_;
  std::vector<std::complex<double>> coeffs_;  // bins 0..n/2, Hermitian half
};

}  // namespace fraclaw
