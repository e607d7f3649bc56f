#include "fraclaw/flux/physical_flux.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fraclaw/mesh/quadrature.hpp"

namespace fraclaw {
namespace {

constexpr int kSamples = 10000;

template <class F>
double sampled_max(F&& g, double lo, double hi) {
  double m = std::max(g(lo), g(hi));
  for (int s = 1; s < kSamples; ++s) m = std::max(m, g(lo + (hi - lo) * s / kSamples));
  return m;
}

}  // namespace

PhysicalFlux PhysicalFlux::zero() { return {PhysicalFluxKind::zero, 0.0, true}; }

PhysicalFlux PhysicalFlux::linear(double speed) {
  if (!std::isfinite(speed)) throw std::invalid_argument("linear flux speed must be finite");
  return {PhysicalFluxKind::linear, speed, true};
}

PhysicalFlux PhysicalFlux::burgers() { return {PhysicalFluxKind::burgers, 0.0, true}; }

PhysicalFlux PhysicalFlux::custom(std::function<double(double)> f, std::function<double(double)> f_prime, bool convex) {
  if (!f || !f_prime) throw std::invalid_argument("custom flux needs both f and f'");
  PhysicalFlux p{PhysicalFluxKind::custom, 0.0, convex};
  p.f_ = std::move(f);
  p.f_prime_ = std::move(f_prime);
  return p;
}

double PhysicalFlux::operator()(double u) const {
  switch (kind_) {
    case PhysicalFluxKind::zero: return 0.0;
    case PhysicalFluxKind::linear: return speed_ * u;
    case PhysicalFluxKind::burgers: return 0.5 * u * u;
    case PhysicalFluxKind::custom: return f_(u);
  }
  return 0.0;
}

double PhysicalFlux::derivative(double u) const {
  switch (kind_) {
    case PhysicalFluxKind::zero: return 0.0;
    case PhysicalFluxKind::linear: return speed_;
    case PhysicalFluxKind::burgers: return u;
    case PhysicalFluxKind::custom: return f_prime_(u);
  }
  return 0.0;
}

double PhysicalFlux::max_abs_derivative(double lo, double hi) const {
  if (lo > hi) std::swap(lo, hi);
  switch (kind_) {
    case PhysicalFluxKind::zero: return 0.0;
    case PhysicalFluxKind::linear: return std::abs(speed_);
    case PhysicalFluxKind::burgers: return std::max(std::abs(lo), std::abs(hi));
    case PhysicalFluxKind::custom: return sampled_max([&](double u) { return std::abs(f_prime_(u)); }, lo, hi);
  }
  return 0.0;
}

double PhysicalFlux::max_positive_derivative(double lo, double hi) const {
  if (lo > hi) std::swap(lo, hi);
  switch (kind_) {
    case PhysicalFluxKind::zero: return 0.0;
    case PhysicalFluxKind::linear: return std::max(speed_, 0.0);
    case PhysicalFluxKind::burgers: return std::max(hi, 0.0);
    case PhysicalFluxKind::custom: return std::max(0.0, sampled_max(f_prime_, lo, hi));
  }
  return 0.0;
}

double PhysicalFlux::max_negative_derivative(double lo, double hi) const {
  if (lo > hi) std::swap(lo, hi);
  switch (kind_) {
    case PhysicalFluxKind::zero: return 0.0;
    case PhysicalFluxKind::linear: return std::max(-speed_, 0.0);
    case PhysicalFluxKind::burgers: return std::max(-lo, 0.0);
    case PhysicalFluxKind::custom:
      return std::max(0.0, sampled_max([&](double u) { return -f_prime_(u); }, lo, hi));
  }
  return 0.0;
}

double PhysicalFlux::integral(double a, double b) const {
  switch (kind_) {
    case PhysicalFluxKind::zero: return 0.0;
    case PhysicalFluxKind::linear: return 0.5 * speed_ * (b * b - a * a);
    case PhysicalFluxKind::burgers: return (b * b * b - a * a * a) / 6.0;
    case PhysicalFluxKind::custom: return integrate_gauss(f_, a, b, 20);
  }
  return 0.0;
}

std::string PhysicalFlux::name() const {
  switch (kind_) {
    case PhysicalFluxKind::zero: return "zero";
    case PhysicalFluxKind::linear: return "linear";
    case PhysicalFluxKind::burgers: return "burgers";
    case PhysicalFluxKind::custom: return "custom";
  }
  return "";
}

}  // namespace fraclaw
