#include "fraclaw/reference/spectral.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fraclaw/fractional/block_toeplitz.hpp"

namespace fraclaw {
namespace {

bool power_of_two(std::size_t n) { return n >= 2 && (n & (n - 1)) == 0; }

// Forward r2c transform of real samples (unnormalised).
std::vector<std::complex<double>> forward(std::span<const double> u) {
  const std::size_t n = u.size();
  std::vector<double> in(u.begin(), u.end());
  std::vector<std::complex<double>> out(n / 2 + 1);
  std::lock_guard lock(detail::fftw_planner_mutex());
  fftw_plan p = fftw_plan_dft_r2c_1d(static_cast<int>(n), in.data(), reinterpret_cast<fftw_complex*>(out.data()),
                                     FFTW_ESTIMATE);
  fftw_execute(p);
  fftw_destroy_plan(p);
  return out;
}

std::vector<double> backward(std::vector<std::complex<double>> hat, std::size_t n) {
  std::vector<double> out(n);
  std::lock_guard lock(detail::fftw_planner_mutex());
  fftw_plan p = fftw_plan_dft_c2r_1d(static_cast<int>(n), reinterpret_cast<fftw_complex*>(hat.data()), out.data(),
                                     FFTW_ESTIMATE);
  fftw_execute(p);
  fftw_destroy_plan(p);
  for (double& v : out) v /= static_cast<double>(n);
  return out;
}

void validate(const SpectralGrid& grid, std::size_t samples) {
  if (!power_of_two(grid.n_modes)) throw std::invalid_argument("spectral grid size must be a power of two");
  if (samples != grid.n_modes) throw std::invalid_argument("sample count does not match the spectral grid");
  if (!(grid.period > 0.0)) throw std::invalid_argument("spectral period must be positive");
}

// Multiplier exp(-(i c xi + |xi|^lambda) t) applied in place to the half spectrum.
void propagate(const SpectralGrid& grid, std::vector<std::complex<double>>& hat, double c, double lambda, double t) {
  const std::size_t n = grid.n_modes;
  for (std::size_t k = 0; k < hat.size(); ++k) {
    const double xi = 2.0 * std::numbers::pi * static_cast<double>(k) / grid.period;
    std::complex<double> m = std::exp(std::complex<double>(-std::pow(xi, lambda) * t, -c * xi * t));
    // The Nyquist bin carries cos only; keep it real so the output stays real.
    if (2 * k == n) m = std::exp(-std::pow(xi, lambda) * t) * std::cos(c * xi * t);
    hat[k] *= m;
  }
}

}  // namespace

double SpectralGrid::xi(std::size_t k) const noexcept {
  const auto kk = static_cast<double>(k);
  const auto n = static_cast<double>(n_modes);
  return 2.0 * std::numbers::pi * (kk <= n / 2 ? kk : kk - n) / period;
}

SpectralGrid make_spectral_grid(double a, double b, std::size_t n_modes, double padding) {
  if (!(b > a)) throw std::invalid_argument("make_spectral_grid: empty window");
  if (!(padding >= 1.0)) throw std::invalid_argument("make_spectral_grid: padding must be >= 1");
  if (!power_of_two(n_modes)) throw std::invalid_argument("make_spectral_grid: n_modes must be a power of two");
  const double L = padding * (b - a);
  return {n_modes, 0.5 * (a + b) - 0.5 * L, L};
}

void check_edge_decay(std::span<const double> u) {
  if (u.empty()) return;
  double m = 0.0;
  for (double v : u) m = std::max(m, std::abs(v));
  if (std::abs(u.front()) > 1e-8 * m || std::abs(u.back()) > 1e-8 * m)
    throw std::domain_error("spectral solve: data does not decay at the edges of the period");
}

std::vector<double> spectral_linear_solve(const SpectralGrid& grid, std::span<const double> u0, double c,
                                          double lambda, double t) {
  validate(grid, u0.size());
  if (!(lambda > 0.0 && lambda < 2.0)) throw std::domain_error("spectral solve: lambda outside (0, 2)");
  if (!(t >= 0.0)) throw std::invalid_argument("spectral solve: t must be >= 0");
  auto hat = forward(u0);
  propagate(grid, hat, c, lambda, t);
  return backward(std::move(hat), grid.n_modes);
}

std::vector<double> fractional_heat_solve(const SpectralGrid& grid, std::span<const double> u0, double lambda,
                                          double t) {
  return spectral_linear_solve(grid, u0, 0.0, lambda, t);
}

SpectralSolution::SpectralSolution(const SpectralGrid& grid, const std::function<double(double)>& u0, double c,
                                   double lambda, double t)
    : grid_(grid) {
  std::vector<double> samples(grid.n_modes);
  for (std::size_t j = 0; j < grid.n_modes; ++j) samples[j] = u0(grid.x(j));
  validate(grid, samples.size());
  check_edge_decay(samples);
  coeffs_ = forward(samples);
  propagate(grid, coeffs_, c, lambda, t);
  const double inv_n = 1.0 / static_cast<double>(grid.n_modes);
  for (auto& z : coeffs_) z *= inv_n;
}

double SpectralSolution::operator()(double x) const {
  const std::size_t n = grid_.n_modes;
  const double w = 2.0 * std::numbers::pi * (x - grid_.x_left) / grid_.period;
  double sum = coeffs_[0].real();
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    const double term = (coeffs_[k] * std::polar(1.0, w * static_cast<double>(k))).real();
    sum += 2 * k == n ? term : 2.0 * term;
  }
  return sum;
}

double SpectralSolution::average(double a, double b) const {
  if (!(b > a)) throw std::invalid_argument("SpectralSolution::average: empty interval");
  const std::size_t n = grid_.n_modes;
  const double scale = 2.0 * std::numbers::pi / grid_.period;
  double sum = coeffs_[0].real();
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    const double kk = scale * static_cast<double>(k);
    // mean of exp(i kk (x - x_left)) over [a, b]
    const std::complex<double> mean = (std::polar(1.0, kk * (b - grid_.x_left)) - std::polar(1.0, kk * (a - grid_.x_left))) /
                                      (std::complex<double>(0.0, kk) * (b - a));
    const double term = (coeffs_[k] * mean).real();
    sum += 2 * k == n ? term : 2.0 * term;
  }
  return sum;
}

}  // namespace fraclaw
