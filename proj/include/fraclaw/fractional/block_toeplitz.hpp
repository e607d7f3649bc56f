#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "fraclaw/mesh/grid.hpp"

namespace fraclaw {

enum class MatvecPath { automatic, dense, fft };

namespace detail {
struct FftPlans;
/// FFTW planning is not thread-safe; every plan creation and destruction in
/// the library holds this lock.
std::mutex& fftw_planner_mutex();
}

/// Block Toeplitz (zero extension) or block circulant (periodic) operator on
/// n cells with B x B blocks:
///   y[q][i] = sum_p sum_j t^{qp}_{j-i} x[p][j]
/// Vectors are mode-major: entry (p, i) lives at p * n + i.
///
/// The FFT path embeds the Toeplitz matrix in a circulant of size 2n with
/// zero padding, so the zero-extension boundary is reproduced exactly.
class BlockToeplitz {
 public:
  /// coefficient(offset, q, p). For zero_extension offsets span [-(n-1), n-1];
  /// for periodic the callback receives d in [0, n) and must return the
  /// already folded circulant coefficient.
  using Coefficient = std::function<double(std::int64_t offset, int q, int p)>;

  BlockToeplitz(std::size_t n_cells, int block, Boundary boundary, const Coefficient& coefficient);

  std::size_t n_cells() const noexcept { return n_; }
  int block() const noexcept { return block_; }
  Boundary boundary() const noexcept { return boundary_; }

  /// Stored coefficient t^{qp}_offset (periodic offsets are reduced mod n).
  double coefficient(std::int64_t offset, int q, int p) const noexcept;

  /// y = A x. Throws std::invalid_argument on size mismatch.
  void apply(std::span<const double> x, std::span<double> y, MatvecPath path = MatvecPath::automatic) const;
  std::vector<double> apply(std::span<const double> x, MatvecPath path = MatvecPath::automatic) const;

 private:
  std::size_t offset_count() const noexcept;
  std::size_t offset_index(std::int64_t offset) const noexcept;
  void apply_dense(std::span<const double> x, std::span<double> y) const;
  void apply_fft(std::span<const double> x, std::span<double> y) const;

  std::size_t n_;
  int block_;
  Boundary boundary_;
  std::vector<double> coeffs_;
  std::size_t fft_size_ = 0;
  std::vector<std::complex<double>> kernel_hat_;
  std::shared_ptr<const detail::FftPlans> plans_;
};

}  // namespace fraclaw
