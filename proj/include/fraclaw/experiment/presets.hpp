#pragma once

#include <string>
#include <vector>

#include "fraclaw/mesh/projection.hpp"

namespace fraclaw {

/// Named initial data:
///   sgn        sgn(x)
///   minus_sgn  -sgn(x)
///   arctan     -arctan(15 x) / 90
///   sgn_hat    sgn(x) for |x| > 1/4, 4x for |x| <= 1/4
///   sin2pi     sin(2 pi x)
///   hat        max(0, 1 - 2|x|), a symmetric tent of height 1 on [-1/2, 1/2]
///   gaussian   exp(-32 x^2)
struct Preset {
  std::string name;
  InitialData data;
  /// sup |u0| over the real line; the data never exceeds it on any window.
  double sup_norm;
};

const std::vector<std::string>& preset_names();

/// Throws std::invalid_argument for unknown names.
Preset make_preset(const std::string& name);

}  // namespace fraclaw
