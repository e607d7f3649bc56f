#include "fraclaw/fractional/block_toeplitz.hpp"

#include <fftw3.h>

#include <algorithm>
#include <stdexcept>

namespace fraclaw {

namespace detail {

std::mutex& fftw_planner_mutex() {
  static std::mutex m;
  return m;
}

/// Real-to-complex / complex-to-real plans of one size. Plans are executed
/// with the new-array interface on per-call buffers, so a shared instance is
/// safe to use concurrently.
struct FftPlans {
  explicit FftPlans(std::size_t size) : n(size) {
    const int ni = static_cast<int>(size);
    std::lock_guard lock(fftw_planner_mutex());
    double* in = fftw_alloc_real(size);
    fftw_complex* out = fftw_alloc_complex(size / 2 + 1);
    forward = fftw_plan_dft_r2c_1d(ni, in, out, FFTW_ESTIMATE);
    backward = fftw_plan_dft_c2r_1d(ni, out, in, FFTW_ESTIMATE);
    fftw_free(in);
    fftw_free(out);
    if (!forward || !backward) throw std::runtime_error("FFTW plan creation failed");
  }
  ~FftPlans() {
    std::lock_guard lock(fftw_planner_mutex());
    fftw_destroy_plan(forward);
    fftw_destroy_plan(backward);
  }
  FftPlans(const FftPlans&) = delete;
  FftPlans& operator=(const FftPlans&) = delete;

  std::size_t n;
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
};

}  // namespace detail

namespace {

struct RealBuffer {
  explicit RealBuffer(std::size_t n) : ptr(fftw_alloc_real(n)), size(n) {}
  ~RealBuffer() { fftw_free(ptr); }
  RealBuffer(const RealBuffer&) = delete;
  RealBuffer& operator=(const RealBuffer&) = delete;
  double* ptr;
  std::size_t size;
};

struct ComplexBuffer {
  explicit ComplexBuffer(std::size_t n) : ptr(fftw_alloc_complex(n)), size(n) {}
  ~ComplexBuffer() { fftw_free(ptr); }
  ComplexBuffer(const ComplexBuffer&) = delete;
  ComplexBuffer& operator=(const ComplexBuffer&) = delete;
  fftw_complex* ptr;
  std::size_t size;
};

}  // namespace

BlockToeplitz::BlockToeplitz(std::size_t n_cells, int block, Boundary boundary, const Coefficient& coefficient)
    : n_(n_cells), block_(block), boundary_(boundary) {
  if (n_cells == 0 || block < 1) throw std::invalid_argument("BlockToeplitz: empty operator");
  const std::size_t bb = static_cast<std::size_t>(block) * static_cast<std::size_t>(block);
  const std::size_t no = offset_count();
  coeffs_.assign(bb * no, 0.0);
  const auto nn = static_cast<std::int64_t>(n_);
  for (int q = 0; q < block; ++q) {
    for (int p = 0; p < block; ++p) {
      double* row = coeffs_.data() + static_cast<std::size_t>(q * block + p) * no;
      if (boundary == Boundary::periodic) {
        for (std::int64_t d = 0; d < nn; ++d) row[d] = coefficient(d, q, p);
      } else {
        for (std::int64_t m = -(nn - 1); m <= nn - 1; ++m) row[offset_index(m)] = coefficient(m, q, p);
      }
    }
  }

  // Kernel transforms: y_i = sum_j h_{i-j} x_j with h_r = t_{-r}.
  fft_size_ = boundary == Boundary::periodic ? n_ : 2 * n_;
  plans_ = std::make_shared<const detail::FftPlans>(fft_size_);
  const std::size_t nh = fft_size_ / 2 + 1;
  kernel_hat_.resize(bb * nh);
  RealBuffer h(fft_size_);
  ComplexBuffer hh(nh);
  for (std::size_t qp = 0; qp < bb; ++qp) {
    const int q = static_cast<int>(qp) / block;
    const int p = static_cast<int>(qp) % block;
    std::fill(h.ptr, h.ptr + fft_size_, 0.0);
    if (boundary == Boundary::periodic) {
      for (std::int64_t r = 0; r < nn; ++r) h.ptr[r] = this->coefficient(-r, q, p);
    } else {
      for (std::int64_t r = 0; r < nn; ++r) h.ptr[r] = this->coefficient(-r, q, p);
      for (std::int64_t r = 1; r < nn; ++r) h.ptr[fft_size_ - static_cast<std::size_t>(r)] = this->coefficient(r, q, p);
    }
    fftw_execute_dft_r2c(plans_->forward, h.ptr, hh.ptr);
    for (std::size_t k = 0; k < nh; ++k) kernel_hat_[qp * nh + k] = {hh.ptr[k][0], hh.ptr[k][1]};
  }
}

std::size_t BlockToeplitz::offset_count() const noexcept {
  return boundary_ == Boundary::periodic ? n_ : 2 * n_ - 1;
}

std::size_t BlockToeplitz::offset_index(std::int64_t offset) const noexcept {
  const auto nn = static_cast<std::int64_t>(n_);
  if (boundary_ == Boundary::periodic) return static_cast<std::size_t>(((offset % nn) + nn) % nn);
  return static_cast<std::size_t>(offset + nn - 1);
}

double BlockToeplitz::coefficient(std::int64_t offset, int q, int p) const noexcept {
  const auto nn = static_cast<std::int64_t>(n_);
  if (boundary_ == Boundary::zero_extension && (offset <= -nn || offset >= nn)) return 0.0;
  return coeffs_[static_cast<std::size_t>(q * block_ + p) * offset_count() + offset_index(offset)];
}

std::vector<double> BlockToeplitz::apply(std::span<const double> x, MatvecPath path) const {
  std::vector<double> y(x.size());
  apply(x, y, path);
  return y;
}

void BlockToeplitz::apply(std::span<const double> x, std::span<double> y, MatvecPath path) const {
  const std::size_t expected = n_ * static_cast<std::size_t>(block_);
  if (x.size() != expected || y.size() != expected)
    throw std::invalid_argument("BlockToeplitz::apply: vector length does not match the grid");
  if (path == MatvecPath::automatic) path = n_ <= 64 ? MatvecPath::dense : MatvecPath::fft;
  if (path == MatvecPath::dense)
    apply_dense(x, y);
  else
    apply_fft(x, y);
}

void BlockToeplitz::apply_dense(std::span<const double> x, std::span<double> y) const {
  const auto nn = static_cast<std::int64_t>(n_);
  const std::size_t no = offset_count();
  for (int q = 0; q < block_; ++q) {
    for (std::int64_t i = 0; i < nn; ++i) {
      double acc = 0.0;
      for (int p = 0; p < block_; ++p) {
        const double* row = coeffs_.data() + static_cast<std::size_t>(q * block_ + p) * no;
        const double* xp = x.data() + static_cast<std::size_t>(p) * n_;
        for (std::int64_t j = 0; j < nn; ++j) acc += row[offset_index(j - i)] * xp[j];
      }
      y[static_cast<std::size_t>(q) * n_ + static_cast<std::size_t>(i)] = acc;
    }
  }
}

void BlockToeplitz::apply_fft(std::span<const double> x, std::span<double> y) const {
  const std::size_t nh = fft_size_ / 2 + 1;
  const auto b = static_cast<std::size_t>(block_);
  RealBuffer work(fft_size_);
  ComplexBuffer spectrum(nh);
  std::vector<std::complex<double>> x_hat(b * nh);

  for (std::size_t p = 0; p < b; ++p) {
    std::fill(work.ptr, work.ptr + fft_size_, 0.0);
    std::copy_n(x.data() + p * n_, n_, work.ptr);
    fftw_execute_dft_r2c(plans_->forward, work.ptr, spectrum.ptr);
    for (std::size_t k = 0; k < nh; ++k) x_hat[p * nh + k] = {spectrum.ptr[k][0], spectrum.ptr[k][1]};
  }

  const double inv = 1.0 / static_cast<double>(fft_size_);
  for (std::size_t q = 0; q < b; ++q) {
    for (std::size_t k = 0; k < nh; ++k) {
      std::complex<double> acc = 0.0;
      for (std::size_t p = 0; p < b; ++p) acc += kernel_hat_[(q * b + p) * nh + k] * x_hat[p * nh + k];
      spectrum.ptr[k][0] = acc.real();
      spectrum.ptr[k][1] = acc.imag();
    }
    fftw_execute_dft_c2r(plans_->backward, spectrum.ptr, work.ptr);
    for (std::size_t i = 0; i < n_; ++i) y[q * n_ + i] = work.ptr[i] * inv;
  }
}

}  // namespace fraclaw
