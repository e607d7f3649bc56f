#pragma once

#include <span>
#include <string>

#include "fraclaw/mesh/grid.hpp"
#include "fraclaw/mesh/poly_state.hpp"

namespace fraclaw {

enum class NormKind { l1, l2, linf, bv };

std::string to_string(NormKind kind);
/// Accepts "1", "2", "inf", "bv" and the enum names. Throws std::invalid_argument.
NormKind parse_norm(const std::string& name);

/// Norms of the piecewise polynomial, integrated exactly cell by cell.
/// BV is the interior variation plus the jumps at interior interfaces; with
/// `include_exterior` the jumps to the zero state outside the window count too.
double norm(const PolyState& state, NormKind kind, bool include_exterior = false);

/// Same for cell averages (k = 0).
double norm(std::span<const double> averages, const GridSpec& grid, NormKind kind, bool include_exterior = false);

/// Norm of a - b on the common refinement of two nested grids over the same
/// window; degrees may differ. Throws std::invalid_argument for non-nested grids.
double difference_norm(const PolyState& a, const PolyState& b, NormKind kind);

}  // namespace fraclaw
