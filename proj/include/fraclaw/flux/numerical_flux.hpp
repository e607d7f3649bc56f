#pragma once

#include <span>
#include <string>
#include <utility>

#include "fraclaw/flux/physical_flux.hpp"

namespace fraclaw {

/// `central` is non-monotone and exists for E-flux diagnostics only; the
/// schemes reject it.
enum class NumericalFluxKind { lax_friedrichs, engquist_osher, godunov, linear_upwind, central };

std::string to_string(NumericalFluxKind kind);
/// Throws std::invalid_argument for unknown names.
NumericalFluxKind parse_numerical_flux(const std::string& name);

/// Two-point numerical flux F(a, b) together with the data fixed at
/// construction: the invariant box [-u_inf, u_inf], the Lax-Friedrichs speed
/// and the one-sided Lipschitz constants on that box.
struct FluxSpec {
  NumericalFluxKind kind = NumericalFluxKind::lax_friedrichs;
  PhysicalFlux f = PhysicalFlux::zero();
  double u_inf = 0.0;
  double lf_speed = 0.0;
  double F1 = 0.0;
  double F2 = 0.0;

  /// Nondecreasing in a, nonincreasing in b on the invariant box.
  bool monotone() const noexcept { return kind != NumericalFluxKind::central; }
};

/// Builds a flux on the box [-u_inf, u_inf]. The Lax-Friedrichs speed is
/// max |f'| on the box. linear_upwind requires a linear (or zero) f.
FluxSpec make_flux(NumericalFluxKind kind, PhysicalFlux f, double u_inf);

double evaluate(const FluxSpec& flux, double a, double b);

/// (F1, F2) on [-u_inf, u_inf]:
///   Lax-Friedrichs           F1 = F2 = (max|f'| + c) / 2
///   Godunov, Engquist-Osher  (max f'^+, max (-f')^+)
///   linear upwind            (c, 0) for c >= 0, (0, |c|) otherwise
std::pair<double, double> lipschitz_constants(const FluxSpec& flux, double u_inf);

/// F(a, b)(b - a) - int_a^b f.
double eflux_defect(const FluxSpec& flux, double a, double b);

/// True iff eflux_defect <= 1e-12 on every sample.
bool is_eflux(const FluxSpec& flux, std::span<const std::pair<double, double>> samples);

}  // namespace fraclaw
