#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fraclaw/experiment/run_config.hpp"
#include "fraclaw/mesh/poly_state.hpp"
#include "fraclaw/schemes/driver.hpp"

namespace fraclaw {

/// (x, u) pairs for plotting: cell centres for k = 0; for k >= 1 the 2k+1
/// points xi_j = -1 + (2j+1)/(2k+1) of every cell.
std::vector<std::pair<double, double>> sample_points(const PolyState& state);

/// Writes snapshot_<n>.csv (columns x,u; a comment line records the time)
/// for every snapshot into `dir` plus a gnuplot script plot.gp overlaying
/// them. Returns the paths written; an empty trajectory writes nothing.
/// Throws std::runtime_error on I/O failure.
std::vector<std::string> emit_snapshots(const Trajectory& trajectory, const RunConfig& config,
                                        const std::string& dir);

}  // namespace fraclaw
