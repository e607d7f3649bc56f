#include "fraclaw/mesh/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fraclaw {

Polynomial Polynomial::legendre(int p) {
  switch (p) {
    case 0:
      return Polynomial{1.0};
    case 1:
      return Polynomial{0.0, 1.0};
    case 2:
      return Polynomial{-0.5, 0.0, 1.5};
    default:
      throw std::invalid_argument("Polynomial::legendre: degree outside [0, 2]");
  }
}

double Polynomial::operator()(double x) const noexcept {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return Polynomial{0.0};
  std::vector<double> d(c_.size() - 1);
  for (std::size_t n = 1; n < c_.size(); ++n) d[n - 1] = static_cast<double>(n) * c_[n];
  return Polynomial(std::move(d));
}

Polynomial Polynomial::antiderivative() const {
  std::vector<double> a(c_.size() + 1, 0.0);
  for (std::size_t n = 0; n < c_.size(); ++n) a[n + 1] = c_[n] / static_cast<double>(n + 1);
  return Polynomial(std::move(a));
}

double Polynomial::integrate(double a, double b) const {
  const Polynomial anti = antiderivative();
  return anti(b) - anti(a);
}

Polynomial Polynomial::compose_affine(double a, double b) const {
  // Horner in polynomial arithmetic.
  Polynomial result{0.0};
  const Polynomial inner{b, a};
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    result = result * inner;
    result += Polynomial{*it};
  }
  return result;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.c_.size() > c_.size()) c_.resize(other.c_.size(), 0.0);
  for (std::size_t n = 0; n < other.c_.size(); ++n) c_[n] += other.c_[n];
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.c_.size() > c_.size()) c_.resize(other.c_.size(), 0.0);
  for (std::size_t n = 0; n < other.c_.size(); ++n) c_[n] -= other.c_[n];
  return *this;
}

Polynomial& Polynomial::operator*=(double s) {
  for (auto& v : c_) v *= s;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.c_.empty() || b.c_.empty()) return Polynomial{0.0};
  std::vector<double> r(a.c_.size() + b.c_.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(r));
}

std::vector<double> Polynomial::roots_in(double a, double b) const {
  if (degree() > 2) throw std::invalid_argument("Polynomial::roots_in: degree > 2");
  const double c0 = coefficient(0);
  const double c1 = coefficient(1);
  const double c2 = coefficient(2);
  std::vector<double> roots;
  auto keep = [&](double r) {
    if (std::isfinite(r) && r > a && r < b) roots.push_back(r);
  };
  if (c2 == 0.0) {
    if (c1 != 0.0) keep(-c0 / c1);
  } else {
    const double disc = c1 * c1 - 4.0 * c2 * c0;
    if (disc > 0.0) {
      const double q = -0.5 * (c1 + std::copysign(std::sqrt(disc), c1));
      keep(q / c2);
      if (q != 0.0) keep(c0 / q);
    }
    // A double root does not change sign, so it never splits |p|.
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

double Polynomial::integrate_abs(double a, double b) const {
  const Polynomial anti = antiderivative();
  std::vector<double> pts{a};
  for (double r : roots_in(a, b)) pts.push_back(r);
  pts.push_back(b);
  double sum = 0.0;
  for (std::size_t k = 0; k + 1 < pts.size(); ++k) sum += std::abs(anti(pts[k + 1]) - anti(pts[k]));
  return sum;
}

double Polynomial::max_abs(double a, double b) const {
  double m = std::max(std::abs((*this)(a)), std::abs((*this)(b)));
  for (double r : derivative().roots_in(a, b)) m = std::max(m, std::abs((*this)(r)));
  return m;
}

double Polynomial::variation(double a, double b) const {
  std::vector<double> pts{a};
  for (double r : derivative().roots_in(a, b)) pts.push_back(r);
  pts.push_back(b);
  double sum = 0.0;
  for (std::size_t k = 0; k + 1 < pts.size(); ++k) sum += std::abs((*this)(pts[k + 1]) - (*this)(pts[k]));
  return sum;
}

}  // namespace fraclaw
