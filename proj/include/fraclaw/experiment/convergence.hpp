#pragma once

#include <span>

#include "fraclaw/experiment/error_table.hpp"
#include "fraclaw/experiment/run_config.hpp"

namespace fraclaw {

/// Runs `base` on each dx (a halving sequence) and on reference_dx, and
/// tabulates E_p = |u_dx - u_ref|_p (exact on the common refinement),
/// R_p = E_p / |u_ref|_p and the rates alpha_p. Grids run concurrently.
ErrorTable convergence_study(const RunConfig& base, std::span<const double> dx_list, double reference_dx);

/// Uses base.study_dx and base.reference_dx.
ErrorTable convergence_study(const RunConfig& base);

}  // namespace fraclaw
