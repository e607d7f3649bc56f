#include "fraclaw/mesh/legendre.hpp"

#include <stdexcept>
#include <string>

namespace fraclaw {
namespace {

void check_degree(int p) {
  if (p < 0 || p > kMaxDegree)
    throw std::invalid_argument("Legendre degree " + std::to_string(p) + " outside [0, 2]");
}

}  // namespace

double legendre_eval(int p, double xi) {
  check_degree(p);
  switch (p) {
    case 0:
      return 1.0;
    case 1:
      return xi;
    default:
      return 0.5 * (3.0 * xi * xi - 1.0);
  }
}

double legendre_derivative(int p, double xi) {
  check_degree(p);
  switch (p) {
    case 0:
      return 0.0;
    case 1:
      return 1.0;
    default:
      return 3.0 * xi;
  }
}

}  // namespace fraclaw
