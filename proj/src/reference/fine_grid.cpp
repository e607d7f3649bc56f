#include "fraclaw/reference/fine_grid.hpp"

#include <cmath>
#include <stdexcept>

#include "fraclaw/mesh/legendre.hpp"
#include "fraclaw/mesh/quadrature.hpp"
#include "fraclaw/schemes/driver.hpp"

namespace fraclaw {

PolyState fine_grid_reference(const SchemeConfig& config, const InitialData& u0, const GridSpec& fine) {
  return run(config, u0, fine).final_state();
}

std::size_t refinement_factor(const GridSpec& coarse, const GridSpec& fine) {
  const double tol = 1e-12 * coarse.length();
  if (std::abs(coarse.x_left() - fine.x_left()) > tol || std::abs(coarse.x_right() - fine.x_right()) > tol)
    throw std::invalid_argument("grids cover different windows");
  if (fine.n_cells() % coarse.n_cells() != 0) throw std::invalid_argument("fine grid is not nested in the coarse grid");
  return fine.n_cells() / coarse.n_cells();
}

std::vector<double> restrict_averages(std::span<const double> fine, std::size_t factor) {
  if (factor == 0 || fine.size() % factor != 0) throw std::invalid_argument("restrict_averages: bad factor");
  std::vector<double> out(fine.size() / factor, 0.0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < factor; ++j) s += fine[i * factor + j];
    out[i] = s / static_cast<double>(factor);
  }
  return out;
}

PolyState restrict_to_coarse(const PolyState& fine, const GridSpec& coarse, int degree) {
  const std::size_t r = refinement_factor(coarse, fine.grid());
  if (degree < 0 || degree > kMaxDegree) throw std::invalid_argument("restrict_to_coarse: degree outside [0, 2]");
  PolyState out(coarse, degree);
  // Products of two degree-2 polynomials are integrated exactly.
  const auto& rule = gauss_legendre(3);
  for (std::size_t i = 0; i < coarse.n_cells(); ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      const std::size_t f = i * r + j;
      for (std::size_t g = 0; g < rule.nodes.size(); ++g) {
        const double eta = rule.nodes[g];
        const double u = fine.eval_in_cell(f, eta);
        // Fine reference point mapped into the coarse cell.
        const double xi = -1.0 + (2.0 * static_cast<double>(j) + 1.0 + eta) / static_cast<double>(r);
        for (int q = 0; q <= degree; ++q)
          out(q, i) += (2.0 * q + 1.0) / 2.0 * rule.weights[g] * u * legendre_eval(q, xi) / static_cast<double>(r);
      }
    }
  }
  return out;
}

}  // namespace fraclaw
