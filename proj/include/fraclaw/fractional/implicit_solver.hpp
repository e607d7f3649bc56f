#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fraclaw/fractional/fractional_operator.hpp"

namespace fraclaw {

struct ImplicitSolveOptions {
  /// Stop when ||v - dt g<v> - rhs||_inf <= tolerance * ||rhs||_inf.
  double tolerance = 1e-10;
  std::size_t max_iterations = 500;
  /// Jacobi relaxation weight in (0, 1].
  double damping = 1.0;
  bool allow_cg_fallback = true;
};

struct ImplicitSolveReport {
  std::size_t iterations = 0;
  /// Final ||v - dt g<v> - rhs||_inf (absolute).
  double residual = 0.0;
  bool used_cg = false;
};

/// Solves v_i - dt g<v>_i = rhs_i.
///
/// The matrix I - dt G/dx is strictly diagonally dominant with nonpositive
/// off-diagonals, so Jacobi converges; if it stalls the symmetric positive
/// definite system is handed to conjugate gradients. Throws NumericalError
/// when neither reaches the tolerance, std::invalid_argument on bad sizes or
/// dt <= 0.
std::vector<double> solve_implicit(const FractionalOperator& op, double dt, std::span<const double> rhs,
                                   const ImplicitSolveOptions& options = {}, ImplicitSolveReport* report = nullptr);

/// Convenience overload building a zero-extension operator on rhs.size() cells.
std::vector<double> solve_implicit(const FracStencil& stencil, double dt, std::span<const double> rhs,
                                   const ImplicitSolveOptions& options = {}, ImplicitSolveReport* report = nullptr);

}  // namespace fraclaw
