#pragma once

#include <iosfwd>
#include <string>

#include "fraclaw/fractional/stencil.hpp"

namespace fraclaw {

/// CSV layout:
///   # lambda=<v>,dx=<v>,c_lambda=<v>
///   m,G_m
///   0,<g0>
///   1,<G_1>
///   ...
/// Values are written with 17 significant digits so a load reproduces the
/// stencil bit for bit.
void write_stencil_csv(std::ostream& out, const FracStencil& stencil);
void dump_stencil(const std::string& path, const FracStencil& stencil);

/// Throws std::runtime_error on malformed input (missing header, gaps in m,
/// a diagonal inconsistent with lambda and dx) or unreadable files.
FracStencil read_stencil_csv(std::istream& in);
FracStencil load_stencil(const std::string& path);

}  // namespace fraclaw
