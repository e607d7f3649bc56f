#pragma once

#include <initializer_list>
#include <vector>

namespace fraclaw {

/// Dense univariate polynomial c[0] + c[1] x + ... in the monomial basis.
/// Only used for low degrees (cell-local algebra), where the monomial basis is
/// well conditioned.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<double> coeffs) : c_(coeffs) {}
  explicit Polynomial(std::vector<double> coeffs) : c_(std::move(coeffs)) {}

  /// Legendre polynomial of degree p on [-1, 1].
  static Polynomial legendre(int p);

  int degree() const noexcept { return c_.empty() ? 0 : static_cast<int>(c_.size()) - 1; }
  const std::vector<double>& coefficients() const noexcept { return c_; }
  double coefficient(int n) const noexcept {
    return n >= 0 && n < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(n)] : 0.0;
  }

  double operator()(double x) const noexcept;

  Polynomial derivative() const;
  /// Antiderivative vanishing at 0.
  Polynomial antiderivative() const;
  double integrate(double a, double b) const;

  /// x -> p(a x + b).
  Polynomial compose_affine(double a, double b) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(double s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, double s) { return a *= s; }
  friend Polynomial operator*(double s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  /// Real roots in the open interval (a, b), sorted. Degree <= 2 only.
  std::vector<double> roots_in(double a, double b) const;

  /// Exact integral of |p| over [a, b] (degree <= 2).
  double integrate_abs(double a, double b) const;
  /// Exact max of |p| over [a, b] (degree <= 2).
  double max_abs(double a, double b) const;
  /// Exact total variation of p over [a, b] (degree <= 2).
  double variation(double a, double b) const;

 private:
  std::vector<double> c_;
};

}  // namespace fraclaw
