#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "fraclaw/errors.hpp"
#include "fraclaw/experiment/convergence.hpp"
#include "fraclaw/experiment/error_table.hpp"
#include "fraclaw/experiment/norms.hpp"
#include "fraclaw/experiment/presets.hpp"
#include "fraclaw/experiment/run_config.hpp"
#include "fraclaw/experiment/snapshots.hpp"
#include "fraclaw/experiment/validation.hpp"
#include "fraclaw/mesh/projection.hpp"

namespace fraclaw {
namespace {

namespace fs = std::filesystem;
constexpr double kPi = std::numbers::pi;

fs::path scratch_dir(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("fraclaw_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

TEST(Norms, IndicatorOfOneCell) {
  const GridSpec g(0, 1, 10);
  std::vector<double> u(10, 0.0);
  u[4] = 1.0;
  EXPECT_NEAR(norm(u, g, NormKind::l1), 0.1, 1e-15);
  EXPECT_NEAR(norm(u, g, NormKind::l2), std::sqrt(0.1), 1e-15);
  EXPECT_EQ(norm(u, g, NormKind::linf), 1.0);
  EXPECT_EQ(norm(u, g, NormKind::bv), 2.0);
  u[4] = 0.0;
  u[0] = 1.0;
  EXPECT_EQ(norm(u, g, NormKind::bv), 1.0);
  EXPECT_EQ(norm(u, g, NormKind::bv, true), 2.0);
}

TEST(Norms, MinusSignDatum) {
  const GridSpec g(-1, 1, 20);
  const PolyState s = project_l2(make_preset("minus_sgn").data, g, 0);
  EXPECT_NEAR(norm(s, NormKind::bv), 2.0, 1e-14);
  EXPECT_NEAR(norm(s, NormKind::l1), 2.0, 1e-14);
}

TEST(Norms, LinearRampOnOneCell) {
  // u = 1 + s (x - centre) on a single cell of width 0.5: interior variation
  // |s| dx plus the two end jumps to the zero exterior.
  const double s = 3.0, dx = 0.5;
  PolyState st(GridSpec(0, dx, 1), 1);
  st(0, 0) = 1.0;
  st(1, 0) = s * dx / 2;
  EXPECT_NEAR(norm(st, NormKind::bv), s * dx, 1e-15);
  EXPECT_NEAR(norm(st, NormKind::bv, true), s * dx + (1 - s * dx / 2) + (1 + s * dx / 2), 1e-15);
  EXPECT_NEAR(norm(st, NormKind::linf), 1.75, 1e-15);
  // Exact L1 of a linear function that changes sign: 1 +- 0.75 stays positive.
  EXPECT_NEAR(norm(st, NormKind::l1), 0.5, 1e-15);
}

TEST(Norms, ExactForQuadratics) {
  const GridSpec g(-1, 1, 4);
  const PolyState s = project_l2([](double x) { return x * x - 0.25; }, g, 2);
  EXPECT_NEAR(norm(s, NormKind::l1), 0.5, 1e-14);
  EXPECT_NEAR(norm(s, NormKind::linf), 0.75, 1e-14);
  EXPECT_NEAR(norm(s, NormKind::l2), std::sqrt(2.0 / 5 - 1.0 / 3 + 1.0 / 8), 1e-14);
  EXPECT_NEAR(norm(s, NormKind::bv), 2.0, 1e-14);
}

TEST(Norms, DifferenceOnCommonRefinement) {
  const GridSpec coarse(0, 1, 4), fine(0, 1, 16);
  const PolyState a = project_l2([](double x) { return x; }, coarse, 1);
  const PolyState b = project_l2([](double x) { return x; }, fine, 0);
  // Piecewise-constant approximation of x on 16 cells: L1 error dx / 4.
  EXPECT_NEAR(difference_norm(a, b, NormKind::l1), 1.0 / 64, 1e-15);
  EXPECT_NEAR(difference_norm(b, a, NormKind::linf), 1.0 / 32, 1e-15);
  EXPECT_EQ(difference_norm(a, a, NormKind::l2), 0.0);
  EXPECT_THROW(difference_norm(a, project_l2([](double x) { return x; }, GridSpec(0, 1, 6), 0), NormKind::l1),
               std::invalid_argument);
}

TEST(Norms, Names) {
  for (auto k : {NormKind::l1, NormKind::l2, NormKind::linf, NormKind::bv}) EXPECT_EQ(parse_norm(to_string(k)), k);
  EXPECT_EQ(parse_norm("inf"), NormKind::linf);
  EXPECT_THROW(parse_norm("h1"), std::invalid_argument);
}

ErrorTable sample_table() {
  ErrorTable t;
  double e = 0.3;
  for (double dx : {0.1, 0.05, 0.025, 0.0125}) {
    ErrorRow r;
    r.dx = dx;
    for (std::size_t p = 0; p < 3; ++p) {
      r.error[p] = e * (1 + 0.1 * double(p));
      r.relative[p] = r.error[p] / 1.7;
    }
    t.rows.push_back(r);
    e *= 0.55;
  }
  t.compute_rates();
  return t;
}

TEST(ErrorTableTest, RatesAreScaleFree) {
  ErrorTable t = sample_table();
  ASSERT_TRUE(t.rows[0].alpha[kL1].has_value());
  EXPECT_NEAR(*t.rows[0].alpha[kL1], std::log2(1 / 0.55), 1e-14);
  EXPECT_FALSE(t.rows.back().alpha[kL1].has_value());
  ErrorTable scaled = t;
  for (auto& r : scaled.rows)
    for (auto& e : r.error) e *= 123.0;
  scaled.compute_rates();
  for (std::size_t i = 0; i + 1 < t.rows.size(); ++i)
    for (std::size_t p = 0; p < 3; ++p) EXPECT_NEAR(*scaled.rows[i].alpha[p], *t.rows[i].alpha[p], 1e-13);
}

TEST(ErrorTableTest, ZeroErrorsLeaveRatesUndefined) {
  ErrorTable t;
  t.rows.resize(3);
  t.rows[0].dx = 0.1;
  t.rows[1].dx = 0.05;
  t.rows[2].dx = 0.025;
  t.compute_rates();
  for (const auto& r : t.rows)
    for (const auto& a : r.alpha) EXPECT_FALSE(a.has_value());
}

TEST(ErrorTableTest, CsvRoundTripIsBitExact) {
  const ErrorTable t = sample_table();
  const std::string csv = t.to_csv();
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "dx,E_1,R_1,alpha_1,E_2,R_2,alpha_2,E_inf,R_inf,alpha_inf");
  EXPECT_EQ(ErrorTable::from_csv(csv), t);
  EXPECT_THROW(ErrorTable::from_csv("dx,E_1\n0.1,0.2\n"), std::runtime_error);
  EXPECT_THROW(ErrorTable::from_csv(""), std::runtime_error);
}

TEST(ErrorTableTest, DisplayUsesFourDecimals) {
  const std::string d = sample_table().to_display();
  EXPECT_NE(d.find("0.3000"), std::string::npos);
  EXPECT_NE(d.find("0.8625"), std::string::npos);  // log2(1/0.55)
}

TEST(Presets, Definitions) {
  EXPECT_EQ(preset_names().size(), 7u);
  const auto s = make_preset("sin2pi");
  for (double x : {-1.3, -0.2, 0.0, 0.37, 1.1}) EXPECT_DOUBLE_EQ(s.data.value(x), std::sin(2 * kPi * x));
  const auto h = make_preset("sgn_hat");
  EXPECT_EQ(h.data.value(-0.5), -1.0);
  EXPECT_EQ(h.data.value(0.1), 0.4);
  EXPECT_EQ(h.data.value(0.9), 1.0);
  EXPECT_NEAR(make_preset("arctan").data.value(1.0), -std::atan(15.0) / 90, 1e-16);
  EXPECT_NEAR(make_preset("arctan").sup_norm, kPi / 180, 1e-16);
  EXPECT_EQ(make_preset("hat").data.value(0.25), 0.5);
  EXPECT_EQ(make_preset("hat").data.value(0.75), 0.0);
  EXPECT_EQ(make_preset("minus_sgn").data.value(-0.1), 1.0);
  EXPECT_THROW(make_preset("square"), std::invalid_argument);
  for (const auto& name : preset_names()) {
    const auto p = make_preset(name);
    for (int i = -300; i <= 300; ++i) EXPECT_LE(std::abs(p.data.value(i / 100.0)), p.sup_norm + 1e-15) << name;
  }
}

TEST(Config, MinimalConfigGetsDefaults) {
  const RunConfig c = parse_config(R"({"equation": "burgers", "lambda": 0.5, "n_cells": 300, "t_end": 0.5})");
  EXPECT_EQ(c.k, 0);
  EXPECT_EQ(c.scheme, SchemeKind::explicit_fv);
  EXPECT_EQ(c.flux, NumericalFluxKind::lax_friedrichs);
  EXPECT_EQ(c.x_left, -1.5);
  EXPECT_EQ(c.x_right, 1.5);
  EXPECT_EQ(c.cfl_safety, 0.9);
  EXPECT_EQ(c.boundary, Boundary::zero_extension);
  EXPECT_EQ(c.grid().dx(), 0.01);
}

TEST(Config, RejectionsNameTheField) {
  auto field_of = [](const std::string& text, std::vector<std::string> ov = {}) -> std::string {
    try {
      parse_config(text, ov);
    } catch (const ConfigError& e) {
      return e.field();
    }
    return "<accepted>";
  };
  const std::string base = R"({"equation": "burgers", "lambda": 0.5, "n_cells": 30, "t_end": 0.5)";
  EXPECT_EQ(field_of(base + R"(, "scheme": "imex_fv", "k": 1})"), "k");
  EXPECT_EQ(field_of(base + R"(, "colour": 1})"), "colour");
  EXPECT_EQ(field_of(R"({"equation": "burgers", "lambda": 0.5, "t_end": 0.5})"), "n_cells");
  EXPECT_EQ(field_of(base + R"(, "lambda": 1.5})"), "lambda");
  EXPECT_EQ(field_of(base + R"(, "flux": "central"})"), "flux");
  EXPECT_EQ(field_of(base + R"(, "flux": "linear_upwind"})"), "flux");
  EXPECT_EQ(field_of(base + R"(, "preset": "nope"})"), "preset");
  EXPECT_EQ(field_of(base + R"(, "study_dx": [0.1, 0.03]})"), "study_dx");
  EXPECT_EQ(field_of(base + R"(, "n_cells": "many"})"), "n_cells");
  EXPECT_EQ(field_of("{not json"), "");
  EXPECT_EQ(field_of(base + "}", {"k=2", "scheme=dg_rk3"}), "<accepted>");
  EXPECT_EQ(field_of(base + "}", {"k"}), "");
}

TEST(Config, OverridesAndJsonRoundTrip) {
  const RunConfig c = parse_config(R"({"equation": "linear_transport", "lambda": 0.3, "n_cells": 64, "t_end": 1})",
                                   {"speed=-2", "preset=gaussian", "snapshot_times=[0.5]", "boundary=periodic"});
  EXPECT_EQ(c.speed, -2.0);
  EXPECT_EQ(c.preset, "gaussian");
  EXPECT_EQ(c.boundary, Boundary::periodic);
  const RunConfig back = parse_config(to_json(c));
  EXPECT_EQ(to_json(back), to_json(c));
  EXPECT_EQ(physical_flux(c).speed(), -2.0);
  const SchemeConfig sc = to_scheme_config(c);
  EXPECT_EQ(sc.flux.u_inf, 1.0);
  EXPECT_EQ(sc.flux.lf_speed, 2.0);
}

TEST(Config, GridWithDx) {
  const RunConfig c = parse_config(R"({"equation": "burgers", "lambda": 0.5, "n_cells": 30, "t_end": 0.5})");
  EXPECT_EQ(c.grid_with_dx(0.0125).n_cells(), 240u);
  EXPECT_THROW(c.grid_with_dx(0.07), ConfigError);
}

TEST(Snapshots, SamplePoints) {
  const GridSpec g(0, 1, 2);
  PolyState s(g, 1);
  s(0, 0) = 1.0;
  s(1, 0) = 0.3;
  const auto pts = sample_points(s);
  ASSERT_EQ(pts.size(), 6u);
  EXPECT_NEAR(pts[0].first, 0.5 / 6, 1e-15);
  EXPECT_NEAR(pts[0].second, 1.0 - 0.2, 1e-15);
  EXPECT_NEAR(pts[1].first, 0.25, 1e-15);
  EXPECT_NEAR(pts[1].second, 1.0, 1e-15);
  const auto c = sample_points(PolyState(g, 0));
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[1].first, 0.75);
}

TEST(Snapshots, EmptyTrajectoryWritesNothing) {
  const auto dir = scratch_dir("empty");
  const RunConfig c = parse_config(R"({"equation": "burgers", "lambda": 0.5, "n_cells": 30, "t_end": 0.5})");
  EXPECT_TRUE(emit_snapshots(Trajectory{}, c, dir.string()).empty());
  EXPECT_TRUE(fs::is_empty(dir));
}

TEST(Snapshots, WritesCsvAndScript) {
  const auto dir = scratch_dir("emit");
  const RunConfig c = parse_config(
      R"({"equation": "burgers", "lambda": 0.5, "n_cells": 40, "t_end": 0.2, "snapshot_times": [0, 0.1]})");
  const auto traj = run(to_scheme_config(c), make_preset(c.preset).data, c.grid(), {c.snapshot_times, {}});
  const auto files = emit_snapshots(traj, c, (dir / "sub").string());
  ASSERT_EQ(files.size(), 4u);
  std::ifstream in(files[1]);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line.rfind("# t=", 0), 0u);
  std::getline(in, line);
  EXPECT_EQ(line, "x,u");
  std::size_t rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 40u);
  EXPECT_TRUE(fs::exists(dir / "sub" / "plot.gp"));
}

TEST(Convergence, SmallStudyHasFallingErrors) {
  RunConfig c = parse_config(R"({"equation": "burgers", "lambda": 0.5, "n_cells": 30, "t_end": 0.2,
                                 "preset": "sin2pi", "study_dx": [0.1, 0.05, 0.025], "reference_dx": 0.00625})");
  const ErrorTable t = convergence_study(c);
  ASSERT_EQ(t.rows.size(), 3u);
  EXPECT_EQ(t.rows[1].dx, 0.05);
  for (std::size_t i = 0; i + 1 < 3; ++i) {
    EXPECT_GT(t.rows[i].error[kL1], t.rows[i + 1].error[kL1]);
    EXPECT_GT(*t.rows[i].alpha[kL1], 0.5);
  }
  EXPECT_NEAR(t.rows[0].relative[kL2] / t.rows[0].error[kL2], t.rows[2].relative[kL2] / t.rows[2].error[kL2], 1e-15);
  const std::vector<double> bad{0.1, 0.05};
  EXPECT_THROW(convergence_study(c, bad, 0.03), ConfigError);
}

TEST(Validation, SuitePasses) {
  const auto results = run_validation_suite();
  EXPECT_EQ(results.size(), 8u);
  for (const auto& r : results) EXPECT_TRUE(r.passed) << r.name << ": " << r.detail;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(FRACLAW_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST(Cli, ExitCodes) {
  const auto dir = scratch_dir("cli");
  const auto good = dir / "good.json";
  std::ofstream(good) << R"({"equation": "pure_fractional", "lambda": 0.5, "n_cells": 30, "t_end": 0.05,
                             "preset": "hat", "output_dir": ")" << (dir / "out").string() << R"("})";
  const auto bad = dir / "bad.json";
  std::ofstream(bad) << R"({"equation": "burgers", "lambda": 0.5, "n_cells": 30, "t_end": 0.5, "scheme": "imex_fv", "k": 1})";
  EXPECT_EQ(run_cli("run " + good.string()), 0);
  EXPECT_TRUE(fs::exists(dir / "out" / "snapshot_0.csv"));
  EXPECT_EQ(run_cli("run " + bad.string()), 2);
  EXPECT_EQ(run_cli("run " + good.string() + " --set lambda=2"), 2);
  EXPECT_EQ(run_cli("run " + (dir / "missing.json").string()), 2);
  EXPECT_EQ(run_cli("frobnicate"), 2);
  EXPECT_EQ(run_cli("convergence " + good.string() + " --dx 0.1 --dx 0.05 --reference-dx 0.025 --csv " +
                    (dir / "t.csv").string()),
            0);
  std::ifstream csv(dir / "t.csv");
  std::stringstream text;
  text << csv.rdbuf();
  EXPECT_EQ(ErrorTable::from_csv(text.str()).rows.size(), 2u);
}

}  // namespace
}  // namespace fraclaw
