#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "fraclaw/mesh/grid.hpp"
#include "fraclaw/mesh/poly_state.hpp"
#include "fraclaw/mesh/projection.hpp"
#include "fraclaw/schemes/discretization.hpp"

namespace fraclaw {

struct Snapshot {
  double time;
  PolyState state;
};

struct Trajectory {
  std::vector<Snapshot> snapshots;
  std::size_t steps = 0;
  /// CFL step; the last step before each output time may be shorter.
  double dt = 0.0;

  const PolyState& final_state() const { return snapshots.back().state; }
};

struct RunOptions {
  /// Output times in [0, t_end]; t_end is always recorded.
  std::vector<double> output_times;
  /// Called after every step with the new time and state.
  std::function<void(double, const PolyState&)> on_step;
};

/// Marches from `initial` to config.t_end with the CFL step of `disc`.
/// Any step failure is rethrown as NumericalError with the time prepended.
Trajectory run(const Discretization& disc, PolyState initial, const RunOptions& options = {});

/// Projects u0 onto the grid and marches it.
Trajectory run(const SchemeConfig& config, const InitialData& u0, const GridSpec& grid,
               const RunOptions& options = {});

}  // namespace fraclaw
