#pragma once

#include <functional>
#include <string>

namespace fraclaw {

enum class PhysicalFluxKind { zero, linear, burgers, custom };

/// Physical flux f and its derivative. Zero, linear (f = c u) and Burgers
/// (f = u^2/2) have closed forms; custom fluxes supply both callables.
class PhysicalFlux {
 public:
  static PhysicalFlux zero();
  static PhysicalFlux linear(double speed);
  static PhysicalFlux burgers();
  /// `convex` enables the closed-form Godunov flux around the unique
  /// minimiser of f; leave false when unsure.
  static PhysicalFlux custom(std::function<double(double)> f, std::function<double(double)> f_prime,
                             bool convex = false);

  PhysicalFluxKind kind() const noexcept { return kind_; }
  /// Advection speed of a linear flux (0 for the zero flux).
  double speed() const noexcept { return speed_; }
  bool is_linear() const noexcept { return kind_ == PhysicalFluxKind::zero || kind_ == PhysicalFluxKind::linear; }
  bool is_convex() const noexcept { return convex_; }

  double operator()(double u) const;
  double derivative(double u) const;

  /// max |f'| over [lo, hi]. Closed form for the built-in kinds, dense
  /// sampling (10^4 points) for custom fluxes.
  double max_abs_derivative(double lo, double hi) const;
  /// max f'^+ and max (-f')^+ over [lo, hi].
  double max_positive_derivative(double lo, double hi) const;
  double max_negative_derivative(double lo, double hi) const;

  /// int_a^b f(s) ds.
  double integral(double a, double b) const;

  std::string name() const;

 private:
  PhysicalFlux(PhysicalFluxKind kind, double speed, bool convex) : kind_(kind), speed_(speed), convex_(convex) {}

  PhysicalFluxKind kind_;
  double speed_ = 0.0;
  bool convex_ = false;
  std::function<double(double)> f_;
  std::function<double(double)> f_prime_;
};

}  // namespace fraclaw
