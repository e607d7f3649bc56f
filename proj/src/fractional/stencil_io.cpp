#include "fraclaw/fractional/stencil_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace fraclaw {
namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_double(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw std::runtime_error("stencil csv: bad number for " + what + ": '" + s + "'");
  }
  if (used != s.size()) throw std::runtime_error("stencil csv: trailing characters in " + what);
  return v;
}

}  // namespace

void write_stencil_csv(std::ostream& out, const FracStencil& stencil) {
  out << "# lambda=" << fmt17(stencil.lambda()) << ",dx=" << fmt17(stencil.dx())
      << ",c_lambda=" << fmt17(stencil.c_lambda()) << '\n';
  out << "m,G_m\n";
  out << "0," << fmt17(stencil.g0()) << '\n';
  const auto tail = stencil.tail_weights();
  for (std::size_t m = 0; m < tail.size(); ++m) out << (m + 1) << ',' << fmt17(tail[m]) << '\n';
}

void dump_stencil(const std::string& path, const FracStencil& stencil) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_stencil_csv(out, stencil);
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

FracStencil read_stencil_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line.rfind("# ", 0) != 0) throw std::runtime_error("stencil csv: missing header");
  double lambda = NAN, dx = NAN, c = NAN;
  std::stringstream header(line.substr(2));
  std::string item;
  while (std::getline(header, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw std::runtime_error("stencil csv: malformed header entry '" + item + "'");
    const std::string key = item.substr(0, eq);
    const double v = parse_double(item.substr(eq + 1), key);
    if (key == "lambda") lambda = v;
    else if (key == "dx") dx = v;
    else if (key == "c_lambda") c = v;
    else throw std::runtime_error("stencil csv: unknown header key '" + key + "'");
  }
  if (std::isnan(lambda) || std::isnan(dx) || std::isnan(c)) throw std::runtime_error("stencil csv: incomplete header");
  if (!std::getline(in, line) || line != "m,G_m") throw std::runtime_error("stencil csv: missing column header");

  std::vector<double> weights;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw std::runtime_error("stencil csv: malformed row '" + line + "'");
    const double m = parse_double(line.substr(0, comma), "m");
    if (m != static_cast<double>(weights.size())) throw std::runtime_error("stencil csv: offsets must run 0, 1, 2, ...");
    weights.push_back(parse_double(line.substr(comma + 1), "G_m"));
  }
  if (weights.size() < 2) throw std::runtime_error("stencil csv: need the diagonal and at least one off-diagonal");
  std::vector<double> tail(weights.begin() + 1, weights.end());
  FracStencil s = stencil_from_weights(lambda, c, dx, std::move(tail));
  if (std::abs(s.g0() - weights[0]) > 1e-12 * std::abs(weights[0]))
    throw std::runtime_error("stencil csv: diagonal inconsistent with lambda, dx and c_lambda");
  return s;
}

FracStencil load_stencil(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_stencil_csv(in);
}

}  // namespace fraclaw
