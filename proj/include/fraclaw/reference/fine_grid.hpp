#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fraclaw/mesh/grid.hpp"
#include "fraclaw/mesh/poly_state.hpp"
#include "fraclaw/mesh/projection.hpp"
#include "fraclaw/schemes/discretization.hpp"

namespace fraclaw {

/// Final state of the same scheme run on a fine grid over the same window.
PolyState fine_grid_reference(const SchemeConfig& config, const InitialData& u0, const GridSpec& fine);

/// Ratio coarse.dx / fine.dx when the grids share a window and it is an
/// integer; throws std::invalid_argument otherwise.
std::size_t refinement_factor(const GridSpec& coarse, const GridSpec& fine);

/// Means of consecutive groups of `factor` fine averages.
std::vector<double> restrict_averages(std::span<const double> fine, std::size_t factor);

/// L2 projection of a fine piecewise polynomial onto a nested coarse grid.
PolyState restrict_to_coarse(const PolyState& fine, const GridSpec& coarse, int degree);

}  // namespace fraclaw
