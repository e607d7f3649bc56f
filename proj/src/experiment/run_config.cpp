#include "fraclaw/experiment/run_config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "fraclaw/errors.hpp"
#include "fraclaw/experiment/presets.hpp"

namespace fraclaw {
namespace {

using nlohmann::json;

const std::set<std::string> kKeys{"equation",     "speed",      "lambda",      "x_left",     "x_right",
                                  "n_cells",      "k",          "scheme",      "flux",       "cfl_safety",
                                  "t_end",        "snapshot_times", "preset",  "output_dir", "boundary",
                                  "limiter",      "limiter_m",  "m_trunc",     "study_dx",   "reference_dx"};

Equation parse_equation(const std::string& s) {
  for (auto e : {Equation::pure_fractional, Equation::linear_transport, Equation::burgers})
    if (to_string(e) == s) return e;
  throw ConfigError("equation", "unknown equation '" + s + "' (pure_fractional, linear_transport, burgers)");
}

Boundary parse_boundary(const std::string& s) {
  if (s == "zero_extension") return Boundary::zero_extension;
  if (s == "periodic") return Boundary::periodic;
  throw ConfigError("boundary", "unknown boundary '" + s + "' (zero_extension, periodic)");
}

std::string boundary_name(Boundary b) { return b == Boundary::periodic ? "periodic" : "zero_extension"; }

template <class T>
T get(const json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(key, std::string("wrong type: ") + e.what());
  }
}

std::size_t get_count(const json& j, const char* key) {
  const json& v = j.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0) throw ConfigError(key, "must be a nonnegative integer");
  return v.get<std::size_t>();
}

json apply_overrides(json j, const std::vector<std::string>& overrides) {
  for (const auto& o : overrides) {
    const auto eq = o.find('=');
    if (eq == std::string::npos || eq == 0) throw ConfigError("", "override '" + o + "' is not key=value");
    const std::string key = o.substr(0, eq);
    const std::string value = o.substr(eq + 1);
    json parsed = json::parse(value, nullptr, false);
    j[key] = parsed.is_discarded() ? json(value) : parsed;
  }
  return j;
}

RunConfig from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("", "config must be a JSON object");
  for (const auto& [key, _] : j.items())
    if (!kKeys.count(key)) throw ConfigError(key, "unknown key");
  for (const char* key : {"equation", "lambda", "n_cells", "t_end"})
    if (!j.contains(key)) throw ConfigError(key, "required key missing");

  RunConfig c;
  c.equation = parse_equation(get<std::string>(j, "equation"));
  c.lambda = get<double>(j, "lambda");
  c.n_cells = get_count(j, "n_cells");
  c.t_end = get<double>(j, "t_end");
  if (j.contains("speed")) c.speed = get<double>(j, "speed");
  if (j.contains("x_left")) c.x_left = get<double>(j, "x_left");
  if (j.contains("x_right")) c.x_right = get<double>(j, "x_right");
  if (j.contains("k")) {
    if (!j["k"].is_number_integer()) throw ConfigError("k", "must be an integer");
    c.k = j["k"].get<int>();
  }
  if (j.contains("scheme")) {
    try {
      c.scheme = parse_scheme_kind(get<std::string>(j, "scheme"));
    } catch (const std::invalid_argument& e) {
      throw ConfigError("scheme", e.what());
    }
  }
  if (j.contains("flux")) {
    try {
      c.flux = parse_numerical_flux(get<std::string>(j, "flux"));
    } catch (const std::invalid_argument& e) {
      throw ConfigError("flux", e.what());
    }
  }
  if (j.contains("cfl_safety")) c.cfl_safety = get<double>(j, "cfl_safety");
  if (j.contains("snapshot_times")) c.snapshot_times = get<std::vector<double>>(j, "snapshot_times");
  if (j.contains("preset")) c.preset = get<std::string>(j, "preset");
  if (j.contains("output_dir")) c.output_dir = get<std::string>(j, "output_dir");
  if (j.contains("boundary")) c.boundary = parse_boundary(get<std::string>(j, "boundary"));
  if (j.contains("limiter")) c.limiter = get<bool>(j, "limiter");
  if (j.contains("limiter_m")) c.limiter_m = get<double>(j, "limiter_m");
  if (j.contains("m_trunc")) c.m_trunc = get_count(j, "m_trunc");
  if (j.contains("study_dx")) c.study_dx = get<std::vector<double>>(j, "study_dx");
  if (j.contains("reference_dx")) c.reference_dx = get<double>(j, "reference_dx");
  validate(c);
  return c;
}

}  // namespace

std::string to_string(Equation e) {
  switch (e) {
    case Equation::pure_fractional: return "pure_fractional";
    case Equation::linear_transport: return "linear_transport";
    case Equation::burgers: return "burgers";
  }
  return "";
}

GridSpec RunConfig::grid_with_dx(double dx) const {
  if (!(dx > 0.0)) throw ConfigError("dx", "must be positive");
  const double cells = (x_right - x_left) / dx;
  const double rounded = std::round(cells);
  if (rounded < 1.0 || std::abs(cells - rounded) > 1e-9 * cells)
    throw ConfigError("dx", "window length is not a multiple of dx = " + std::to_string(dx));
  return {x_left, x_right, static_cast<std::size_t>(rounded)};
}

void validate(const RunConfig& c) {
  if (!(c.lambda > 0.0 && c.lambda < 1.0)) throw ConfigError("lambda", "must lie in (0, 1)");
  if (c.n_cells == 0) throw ConfigError("n_cells", "must be positive");
  if (!(c.x_right > c.x_left)) throw ConfigError("x_right", "must exceed x_left");
  if (!(c.t_end >= 0.0) || !std::isfinite(c.t_end)) throw ConfigError("t_end", "must be finite and >= 0");
  if (c.k < 0 || c.k > 2) throw ConfigError("k", "must be 0, 1 or 2");
  if (!(c.cfl_safety > 0.0 && c.cfl_safety <= 1.0)) throw ConfigError("cfl_safety", "must lie in (0, 1]");
  if (!std::isfinite(c.speed)) throw ConfigError("speed", "must be finite");
  if (!(c.limiter_m >= 0.0)) throw ConfigError("limiter_m", "must be >= 0");
  if (c.scheme != SchemeKind::dg_rk3 && c.k != 0)
    throw ConfigError("k", to_string(c.scheme) + " requires k = 0; use dg_rk3 for k >= 1");
  if (c.flux == NumericalFluxKind::central) throw ConfigError("flux", "central flux is not monotone");
  if (c.flux == NumericalFluxKind::linear_upwind && c.equation == Equation::burgers)
    throw ConfigError("flux", "linear_upwind needs a linear equation");
  for (double t : c.snapshot_times)
    if (!(t >= 0.0 && t <= c.t_end)) throw ConfigError("snapshot_times", "times must lie in [0, t_end]");
  try {
    make_preset(c.preset);
  } catch (const std::invalid_argument& e) {
    throw ConfigError("preset", e.what());
  }
  if (!c.study_dx.empty()) {
    for (std::size_t m = 0; m < c.study_dx.size(); ++m) {
      c.grid_with_dx(c.study_dx[m]);
      if (m > 0 && std::abs(c.study_dx[m - 1] / c.study_dx[m] - 2.0) > 1e-9)
        throw ConfigError("study_dx", "consecutive entries must halve dx");
    }
    if (!(c.reference_dx > 0.0 && c.reference_dx < c.study_dx.back()))
      throw ConfigError("reference_dx", "must be finer than every study dx");
    const GridSpec ref = c.grid_with_dx(c.reference_dx);
    for (double dx : c.study_dx)
      if (ref.n_cells() % c.grid_with_dx(dx).n_cells() != 0)
        throw ConfigError("reference_dx", "reference grid must refine every study grid");
  }
}

RunConfig parse_config(const std::string& json_text, const std::vector<std::string>& overrides) {
  json j = json::parse(json_text, nullptr, false, true);
  if (j.is_discarded()) throw ConfigError("", "config is not valid JSON");
  return from_json(apply_overrides(std::move(j), overrides));
}

RunConfig load_config(const std::string& path, const std::vector<std::string>& overrides) {
  std::ifstream in(path);
  if (!in) throw ConfigError("", "cannot read config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), overrides);
}

std::string to_json(const RunConfig& c) {
  json j{{"equation", to_string(c.equation)},
         {"speed", c.speed},
         {"lambda", c.lambda},
         {"x_left", c.x_left},
         {"x_right", c.x_right},
         {"n_cells", c.n_cells},
         {"k", c.k},
         {"scheme", to_string(c.scheme)},
         {"flux", to_string(c.flux)},
         {"cfl_safety", c.cfl_safety},
         {"t_end", c.t_end},
         {"snapshot_times", c.snapshot_times},
         {"preset", c.preset},
         {"output_dir", c.output_dir},
         {"boundary", boundary_name(c.boundary)},
         {"limiter", c.limiter},
         {"limiter_m", c.limiter_m},
         {"m_trunc", c.m_trunc},
         {"study_dx", c.study_dx},
         {"reference_dx", c.reference_dx}};
  return j.dump(2);
}

PhysicalFlux physical_flux(const RunConfig& c) {
  switch (c.equation) {
    case Equation::pure_fractional: return PhysicalFlux::zero();
    case Equation::linear_transport: return PhysicalFlux::linear(c.speed);
    case Equation::burgers: return PhysicalFlux::burgers();
  }
  return PhysicalFlux::zero();
}

SchemeConfig to_scheme_config(const RunConfig& c) {
  SchemeConfig s;
  s.kind = c.scheme;
  s.degree = c.k;
  s.cfl_safety = c.cfl_safety;
  s.t_end = c.t_end;
  s.lambda = c.lambda;
  s.boundary = c.boundary;
  s.limit = c.limiter;
  s.limiter_m = c.limiter_m;
  s.m_trunc = c.m_trunc;
  s.flux = make_flux(c.flux, physical_flux(c), make_preset(c.preset).sup_norm);
  return s;
}

}  // namespace fraclaw
