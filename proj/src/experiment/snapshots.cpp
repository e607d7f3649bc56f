#include "fraclaw/experiment/snapshots.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace fraclaw {
namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::ofstream open_out(const std::filesystem::path& p) {
  std::ofstream out(p);
  if (!out) throw std::runtime_error("cannot write " + p.string());
  return out;
}

}  // namespace

std::vector<std::pair<double, double>> sample_points(const PolyState& state) {
  const auto& g = state.grid();
  const int k = state.degree();
  const int per_cell = k == 0 ? 1 : 2 * k + 1;
  std::vector<std::pair<double, double>> pts;
  pts.reserve(state.n_cells() * static_cast<std::size_t>(per_cell));
  for (std::size_t i = 0; i < state.n_cells(); ++i) {
    for (int j = 0; j < per_cell; ++j) {
      const double xi = -1.0 + (2.0 * j + 1.0) / per_cell;
      pts.emplace_back(g.from_reference(i, xi), state.eval_in_cell(i, xi));
    }
  }
  return pts;
}

std::vector<std::string> emit_snapshots(const Trajectory& trajectory, const RunConfig& config,
                                        const std::string& dir) {
  std::vector<std::string> written;
  if (trajectory.snapshots.empty()) return written;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create " + dir + ": " + ec.message());

  std::vector<std::string> names;
  for (std::size_t s = 0; s < trajectory.snapshots.size(); ++s) {
    const auto& snap = trajectory.snapshots[s];
    const std::string name = "snapshot_" + std::to_string(s) + ".csv";
    const auto path = std::filesystem::path(dir) / name;
    auto out = open_out(path);
    out << "# t=" << fmt17(snap.time) << " lambda=" << fmt17(config.lambda) << " preset=" << config.preset
        << " scheme=" << to_string(config.scheme) << " k=" << config.k << '\n';
    out << "x,u\n";
    for (const auto& [x, u] : sample_points(snap.state)) out << fmt17(x) << ',' << fmt17(u) << '\n';
    if (!out) throw std::runtime_error("write to " + path.string() + " failed");
    names.push_back(name);
    written.push_back(path.string());
  }

  const auto script = std::filesystem::path(dir) / "plot.gp";
  auto gp = open_out(script);
  gp << "# gnuplot " << script.filename().string() << "  (run from this directory)\n";
  gp << "set datafile separator ','\n";
  gp << "set terminal pngcairo size 900,600\n";
  gp << "set output 'snapshots.png'\n";
  gp << "set xlabel 'x'\nset ylabel 'u'\nset key outside\n";
  gp << "set title '" << to_string(config.equation) << ", lambda = " << config.lambda << ", " << config.preset
     << "'\n";
  gp << "plot ";
  for (std::size_t s = 0; s < names.size(); ++s) {
    if (s) gp << ", \\\n     ";
    gp << "'" << names[s] << "' skip 2 using 1:2 with lines title 't = " << trajectory.snapshots[s].time << "'";
  }
  gp << '\n';
  if (!gp) throw std::runtime_error("write to " + script.string() + " failed");
  written.push_back(script.string());
  return written;
}

}  // namespace fraclaw
