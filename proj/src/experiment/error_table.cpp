#include "fraclaw/experiment/error_table.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace fraclaw {
namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw std::runtime_error("error table csv: bad number '" + s + "'");
  }
  if (used != s.size()) throw std::runtime_error("error table csv: bad number '" + s + "'");
  return v;
}

const char* kHeader = "dx,E_1,R_1,alpha_1,E_2,R_2,alpha_2,E_inf,R_inf,alpha_inf";

}  // namespace

void ErrorTable::compute_rates() {
  for (std::size_t m = 0; m < rows.size(); ++m) {
    for (std::size_t p = 0; p < 3; ++p) {
      rows[m].alpha[p].reset();
      if (m + 1 == rows.size()) continue;
      const double e0 = rows[m].error[p];
      const double e1 = rows[m + 1].error[p];
      if (e0 > 0.0 && e1 > 0.0) rows[m].alpha[p] = (std::log(e0) - std::log(e1)) / std::log(2.0);
    }
  }
}

std::string ErrorTable::to_csv() const {
  std::ostringstream out;
  out << kHeader << '\n';
  for (const auto& r : rows) {
    out << fmt17(r.dx);
    for (std::size_t p = 0; p < 3; ++p) {
      out << ',' << fmt17(r.error[p]) << ',' << fmt17(r.relative[p]) << ',';
      if (r.alpha[p]) out << fmt17(*r.alpha[p]);
    }
    out << '\n';
  }
  return out.str();
}

ErrorTable ErrorTable::from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kHeader) throw std::runtime_error("error table csv: bad header");
  ErrorTable t;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) f.push_back(cell);
    if (!line.empty() && line.back() == ',') f.emplace_back();
    if (f.size() != 10) throw std::runtime_error("error table csv: expected 10 fields, got " + std::to_string(f.size()));
    ErrorRow r;
    r.dx = parse(f[0]);
    for (std::size_t p = 0; p < 3; ++p) {
      r.error[p] = parse(f[1 + 3 * p]);
      r.relative[p] = parse(f[2 + 3 * p]);
      if (!f[3 + 3 * p].empty()) r.alpha[p] = parse(f[3 + 3 * p]);
    }
    t.rows.push_back(r);
  }
  return t;
}

std::string ErrorTable::to_display() const {
  std::ostringstream out;
  char buf[64];
  out << "   dx    |        p = 1            |        p = 2            |        p = inf\n";
  out << "         |  E       R       alpha  |  E       R       alpha  |  E       R       alpha\n";
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "1/%-6.0f", 1.0 / r.dx);
    out << buf;
    for (std::size_t p = 0; p < 3; ++p) {
      std::snprintf(buf, sizeof buf, " | %.4f  %.4f  ", r.error[p], r.relative[p]);
      out << buf;
      if (r.alpha[p]) {
        std::snprintf(buf, sizeof buf, "%.4f", *r.alpha[p]);
        out << buf;
      } else {
        out << "      ";
      }
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace fraclaw
