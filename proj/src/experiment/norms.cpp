#include "fraclaw/experiment/norms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fraclaw/mesh/polynomial.hpp"
#include "fraclaw/reference/fine_grid.hpp"

namespace fraclaw {
namespace {

// Cell polynomial in the reference coordinate.
Polynomial cell_polynomial(const PolyState& s, std::size_t i) {
  Polynomial p{0.0};
  for (int q = 0; q <= s.degree(); ++q) p += Polynomial::legendre(q) * s(q, i);
  return p;
}

// Norm of the piecewise polynomial given per cell on a uniform grid; cells
// share width dx. `cell(i)` returns the reference-coordinate polynomial.
template <class CellFn>
double piecewise_norm(std::size_t n, double dx, CellFn cell, NormKind kind, bool include_exterior) {
  switch (kind) {
    case NormKind::l1: {
      double s = 0.0;
      for (std::size_t i = 0; i < n; ++i) s += cell(i).integrate_abs(-1.0, 1.0);
      return 0.5 * dx * s;
    }
    case NormKind::l2: {
      double s = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        const Polynomial p = cell(i);
        s += (p * p).integrate(-1.0, 1.0);
      }
      return std::sqrt(0.5 * dx * std::max(s, 0.0));
    }
    case NormKind::linf: {
      double m = 0.0;
      for (std::size_t i = 0; i < n; ++i) m = std::max(m, cell(i).max_abs(-1.0, 1.0));
      return m;
    }
    case NormKind::bv: {
      double s = 0.0;
      double prev_right = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        const Polynomial p = cell(i);
        s += p.variation(-1.0, 1.0);
        if (i > 0 || include_exterior) s += std::abs(p(-1.0) - prev_right);
        prev_right = p(1.0);
      }
      if (include_exterior) s += std::abs(prev_right);
      return s;
    }
  }
  return 0.0;
}

}  // namespace

std::string to_string(NormKind kind) {
  switch (kind) {
    case NormKind::l1: return "l1";
    case NormKind::l2: return "l2";
    case NormKind::linf: return "linf";
    case NormKind::bv: return "bv";
  }
  return "";
}

NormKind parse_norm(const std::string& name) {
  if (name == "1" || name == "l1" || name == "L1") return NormKind::l1;
  if (name == "2" || name == "l2" || name == "L2") return NormKind::l2;
  if (name == "inf" || name == "linf" || name == "Linf") return NormKind::linf;
  if (name == "bv" || name == "BV") return NormKind::bv;
  throw std::invalid_argument("unknown norm '" + name + "'");
}

double norm(const PolyState& state, NormKind kind, bool include_exterior) {
  return piecewise_norm(
      state.n_cells(), state.grid().dx(), [&](std::size_t i) { return cell_polynomial(state, i); }, kind,
      include_exterior);
}

double norm(std::span<const double> averages, const GridSpec& grid, NormKind kind, bool include_exterior) {
  if (averages.size() != grid.n_cells()) throw std::invalid_argument("norm: length does not match the grid");
  return piecewise_norm(
      averages.size(), grid.dx(), [&](std::size_t i) { return Polynomial{averages[i]}; }, kind, include_exterior);
}

double difference_norm(const PolyState& a, const PolyState& b, NormKind kind) {
  const bool a_finer = a.n_cells() >= b.n_cells();
  const PolyState& fine = a_finer ? a : b;
  const PolyState& coarse = a_finer ? b : a;
  const std::size_t r = refinement_factor(coarse.grid(), fine.grid());
  const double sign = a_finer ? 1.0 : -1.0;
  auto cell = [&](std::size_t f) {
    const std::size_t i = f / r;
    const std::size_t j = f % r;
    const double inv_r = 1.0 / static_cast<double>(r);
    Polynomial d = cell_polynomial(fine, f);
    d -= cell_polynomial(coarse, i).compose_affine(inv_r, -1.0 + (2.0 * static_cast<double>(j) + 1.0) * inv_r);
    return d * sign;
  };
  return piecewise_norm(fine.n_cells(), fine.grid().dx(), cell, kind, false);
}

}  // namespace fraclaw
