#include "fraclaw/experiment/presets.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fraclaw {
namespace {

double sgn(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names{"sgn", "minus_sgn", "arctan", "sgn_hat", "sin2pi", "hat", "gaussian"};
  return names;
}

Preset make_preset(const std::string& name) {
  if (name == "sgn") return {name, {[](double x) { return sgn(x); }, {0.0}}, 1.0};
  if (name == "minus_sgn") return {name, {[](double x) { return -sgn(x); }, {0.0}}, 1.0};
  if (name == "arctan")
    return {name, {[](double x) { return -std::atan(15.0 * x) / 90.0; }, {}}, 0.5 * std::numbers::pi / 90.0};
  if (name == "sgn_hat")
    return {name, {[](double x) { return std::abs(x) <= 0.25 ? 4.0 * x : sgn(x); }, {-0.25, 0.25}}, 1.0};
  if (name == "sin2pi") return {name, {[](double x) { return std::sin(2.0 * std::numbers::pi * x); }, {}}, 1.0};
  if (name == "hat")
    return {name, {[](double x) { return std::max(0.0, 1.0 - 2.0 * std::abs(x)); }, {-0.5, 0.0, 0.5}}, 1.0};
  if (name == "gaussian") return {name, {[](double x) { return std::exp(-32.0 * x * x); }, {}}, 1.0};
  throw std::invalid_argument("unknown preset '" + name + "'");
}

}  // namespace fraclaw
