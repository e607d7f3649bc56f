#pragma once

#include "fraclaw/schemes/discretization.hpp"

namespace fraclaw {

/// Time step from the CFL condition of the configured scheme:
///   imex_fv      safety dx / (F1 + F2)  (safety dx when F1 + F2 = 0)
///   explicit_fv  safety / ((F1 + F2)/dx + d_lambda / dx^lambda)
///   dg_rk3       the explicit bound divided by 2k + 1
/// Throws std::invalid_argument for dx <= 0.
double cfl_dt(const SchemeConfig& config, double dx);

}  // namespace fraclaw
