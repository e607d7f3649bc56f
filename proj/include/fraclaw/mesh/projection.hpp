#pragma once

#include <functional>
#include <vector>

#include "fraclaw/mesh/grid.hpp"
#include "fraclaw/mesh/poly_state.hpp"

namespace fraclaw {

/// Initial datum u0 with the points where it fails to be smooth. Projection
/// splits cells at these points so piecewise-polynomial data is integrated
/// exactly.
struct InitialData {
  std::function<double(double)> value;
  std::vector<double> breakpoints;
};

/// L2 projection onto the degree-k Legendre basis:
/// U_{q,i} = (2q+1)/dx * int_{I_i} u0 phi_{q,i}.
/// `nodes` Gauss points per smooth piece; 0 selects k + 2.
/// Throws std::domain_error if u0 returns a non-finite sample.
PolyState project_l2(const InitialData& u0, const GridSpec& grid, int degree, std::size_t nodes = 0);
PolyState project_l2(const std::function<double(double)>& u0, const GridSpec& grid, int degree,
                     std::size_t nodes = 0);

/// Evaluates the piecewise polynomial at x. At an interior interface the
/// value of the cell to the right is returned; use left_limit / right_limit
/// for one-sided traces. Throws std::out_of_range outside the domain.
double reconstruct(const PolyState& state, double x);
double left_limit(const PolyState& state, double x);
double right_limit(const PolyState& state, double x);

}  // namespace fraclaw
