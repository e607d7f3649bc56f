#include "fraclaw/mesh/poly_state.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "fraclaw/errors.hpp"
#include "fraclaw/mesh/legendre.hpp"

namespace fraclaw {

PolyState::PolyState(GridSpec grid, int degree)
    : grid_(grid), degree_(degree), coeffs_(static_cast<std::size_t>(degree + 1) * grid.n_cells(), 0.0) {
  if (degree < 0 || degree > kMaxDegree) throw std::invalid_argument("PolyState: degree outside [0, 2]");
}

PolyState::PolyState(GridSpec grid, int degree, std::vector<double> coeffs) : PolyState(grid, degree) {
  if (coeffs.size() != coeffs_.size()) throw std::invalid_argument("PolyState: coefficient count mismatch");
  coeffs_ = std::move(coeffs);
}

double PolyState::right_trace(std::size_t i) const noexcept {
  double s = 0.0;
  for (int p = 0; p <= degree_; ++p) s += (*this)(p, i);
  return s;
}

double PolyState::left_trace(std::size_t i) const noexcept {
  double s = 0.0;
  double sign = 1.0;
  for (int p = 0; p <= degree_; ++p, sign = -sign) s += sign * (*this)(p, i);
  return s;
}

double PolyState::eval_in_cell(std::size_t i, double xi) const {
  double s = 0.0;
  for (int p = 0; p <= degree_; ++p) s += (*this)(p, i) * legendre_eval(p, xi);
  return s;
}

PolyState& PolyState::axpy(double a, const PolyState& other) {
  if (other.degree_ != degree_ || other.coeffs_.size() != coeffs_.size())
    throw std::invalid_argument("PolyState::axpy: shape mismatch");
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += a * other.coeffs_[n];
  return *this;
}

PolyState& PolyState::scale(double a) {
  for (auto& v : coeffs_) v *= a;
  return *this;
}

void PolyState::check_finite(const char* context) const {
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    if (!std::isfinite(coeffs_[n])) {
      std::ostringstream msg;
      msg << context << ": non-finite coefficient U(" << n / grid_.n_cells() << ", " << n % grid_.n_cells()
          << ") = " << coeffs_[n] << " at x = " << grid_.cell_center(n % grid_.n_cells());
      throw NumericalError(msg.str());
    }
  }
}

}  // namespace fraclaw
