#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "fraclaw/flux/numerical_flux.hpp"
#include "fraclaw/mesh/grid.hpp"
#include "fraclaw/schemes/discretization.hpp"

namespace fraclaw {

enum class Equation { pure_fractional, linear_transport, burgers };

std::string to_string(Equation e);

/// One simulation, as read from a JSON config file.
///
/// Required keys: equation, lambda, n_cells, t_end. Defaults of the others:
///   speed 1 (linear_transport only), x_left -1.5, x_right 1.5, k 0,
///   scheme "explicit_fv", flux "lax_friedrichs", cfl_safety 0.9,
///   snapshot_times [], preset "sgn_hat", output_dir "output",
///   boundary "zero_extension", limiter true, limiter_m 0, m_trunc 0 (auto),
///   study_dx [] and reference_dx 0 (convergence studies only).
struct RunConfig {
  Equation equation = Equation::burgers;
  double speed = 1.0;
  double lambda = 0.5;
  double x_left = -1.5;
  double x_right = 1.5;
  std::size_t n_cells = 0;
  int k = 0;
  SchemeKind scheme = SchemeKind::explicit_fv;
  NumericalFluxKind flux = NumericalFluxKind::lax_friedrichs;
  double cfl_safety = 0.9;
  double t_end = 0.0;
  std::vector<double> snapshot_times;
  std::string preset = "sgn_hat";
  std::string output_dir = "output";
  Boundary boundary = Boundary::zero_extension;
  bool limiter = true;
  double limiter_m = 0.0;
  std::size_t m_trunc = 0;
  std::vector<double> study_dx;
  double reference_dx = 0.0;

  GridSpec grid() const { return {x_left, x_right, n_cells}; }
  /// Grid of the same window with cell width dx; throws ConfigError unless
  /// the window holds a whole number of cells.
  GridSpec grid_with_dx(double dx) const;
};

/// Parses JSON text, applies `key=value` overrides (values read as JSON,
/// falling back to plain strings) and validates. Unknown keys, type errors
/// and cross-field violations raise ConfigError naming the field.
RunConfig parse_config(const std::string& json_text, const std::vector<std::string>& overrides = {});
RunConfig load_config(const std::string& path, const std::vector<std::string>& overrides = {});

/// Throws ConfigError on invalid combinations.
void validate(const RunConfig& config);

/// JSON text with every field, suitable for parse_config.
std::string to_json(const RunConfig& config);

PhysicalFlux physical_flux(const RunConfig& config);

/// Scheme settings with the flux built on the invariant box of the preset.
SchemeConfig to_scheme_config(const RunConfig& config);

}  // namespace fraclaw
