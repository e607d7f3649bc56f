#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>

#include "fraclaw/flux/numerical_flux.hpp"
#include "fraclaw/fractional/dg_weights.hpp"
#include "fraclaw/fractional/fractional_operator.hpp"
#include "fraclaw/fractional/implicit_solver.hpp"
#include "fraclaw/fractional/stencil.hpp"
#include "fraclaw/mesh/grid.hpp"
#include "fraclaw/mesh/poly_state.hpp"

namespace fraclaw {

enum class SchemeKind { explicit_fv, imex_fv, dg_rk3 };

std::string to_string(SchemeKind kind);
/// Throws std::invalid_argument for unknown names.
SchemeKind parse_scheme_kind(const std::string& name);

struct SchemeConfig {
  SchemeKind kind = SchemeKind::explicit_fv;
  int degree = 0;
  double cfl_safety = 0.9;
  double t_end = 0.0;
  FluxSpec flux;
  double lambda = 0.5;
  Boundary boundary = Boundary::zero_extension;
  /// TVB limiting after every RK stage (k >= 1 only), threshold limiter_m dx^2.
  bool limit = true;
  double limiter_m = 0.0;
  /// Stencil truncation; 0 selects default_m_trunc.
  std::size_t m_trunc = 0;
  ImplicitSolveOptions implicit{.tolerance = 1e-13, .max_iterations = 2000, .damping = 1.0, .allow_cg_fallback = true};
};

/// Full window (n cells) for zero extension; 16 n for periodic windows, where
/// the stencil also feeds the far-field correction.
std::size_t default_m_trunc(Boundary boundary, std::size_t n_cells);

/// Throws ConfigError naming the offending field: finite-volume kinds need
/// k = 0, dg_rk3 needs a monotone flux and k <= 2, safety in (0, 1],
/// lambda in (0, 1), t_end >= 0.
void validate(const SchemeConfig& config);

/// A scheme bound to a grid: the fractional operator (k = 0) or the DG
/// coupling table (k >= 1), built once and reused across steps.
class Discretization {
 public:
  Discretization(SchemeConfig config, GridSpec grid);

  const SchemeConfig& config() const noexcept { return config_; }
  const GridSpec& grid() const noexcept { return grid_; }
  int degree() const noexcept { return config_.degree; }
  Boundary boundary() const noexcept { return config_.boundary; }
  const FluxSpec& flux() const noexcept { return config_.flux; }
  const FracStencil& stencil() const noexcept { return stencil_; }
  const FractionalOperator& fractional() const noexcept { return fractional_; }
  /// Null for k = 0.
  const DGWeightTable* weights() const noexcept { return weights_ ? &*weights_ : nullptr; }

  /// out[q][i] = ((2q+1)/dx) sum_m sum_p W[m][q][p] U[p][i+m]; for k = 0 this is g<U>.
  void nonlocal_term(const PolyState& state, PolyState& out) const;

  /// One time step of the configured scheme.
  PolyState step(const PolyState& state, double dt) const;

  double cfl_dt() const;

 private:
  SchemeConfig config_;
  GridSpec grid_;
  FracStencil stencil_;
  FractionalOperator fractional_;
  std::optional<DGWeightTable> weights_;
  std::unique_ptr<DGNonlocalOperator> nonlocal_;
};

}  // namespace fraclaw
