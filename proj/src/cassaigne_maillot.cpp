#include <algorithm>
#include <cmath>
#include <numbers>

#include "resmahler/errors.hpp"
#include "resmahler/mahler_numeric.hpp"
#include "resmahler/special_functions.hpp"

namespace resmahler {
namespace {

// Angle opposite `opposite` in a triangle with the other sides s1, s2.
double angle_opposite(double opposite, double s1, double s2) {
  const double c = (s1 * s1 + s2 * s2 - opposite * opposite) / (2.0 * s1 * s2);
  return std::acos(std::clamp(c, -1.0, 1.0));
}

}  // namespace

MahlerEstimate mm_cassaigne_maillot(std::complex<double> a, std::complex<double> b, std::complex<double> c) {
  const double ra = std::abs(a);
  const double rb = std::abs(b);
  const double rc = std::abs(c);
  if (ra == 0.0 || rb == 0.0 || rc == 0.0) throw DomainError("linear form needs three nonzero coefficients");
  if (!std::isfinite(ra) || !std::isfinite(rb) || !std::isfinite(rc))
    throw DomainError("linear form coefficients must be finite");

  // Degenerate triangles take the max branch; the two branches agree there.
  const bool triangle = ra < rb + rc && rb < ra + rc && rc < ra + rb;
  if (!triangle) return MahlerEstimate::exact(std::log(std::max({ra, rb, rc})), MahlerMethod::kClosedForm);

  const double alpha = angle_opposite(ra, rb, rc);
  const double beta = angle_opposite(rb, ra, rc);
  const double gamma = angle_opposite(rc, ra, rb);
  const double d = special::bloch_wigner(std::polar(ra / rb, gamma));
  const double value = (d + alpha * std::log(ra) + beta * std::log(rb) + gamma * std::log(rc)) / std::numbers::pi;
  return MahlerEstimate::exact(value, MahlerMethod::kClosedForm);
}

}  // namespace resmahler
