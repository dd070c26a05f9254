#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "resmahler/special_functions.hpp"

namespace resmahler::special {
namespace {

using std::numbers::pi;

double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// 0.1 < |z| < 10, log-uniform radius, argument bounded away from 0 and pi.
Complex annulus_point(std::mt19937_64& rng) {
  const double r = std::exp(std::log(0.1) + unit_uniform(rng) * 2.0 * std::log(10.0));
  double theta = (0.001 + 0.998 * unit_uniform(rng)) * pi;
  if (rng() & 1U) theta = -theta;
  return std::polar(r, theta);
}

class Tracker {
 public:
  explicit Tracker(std::string name) : report_{std::move(name), 0.0, 0} {}
  void observe(double deviation) {
    report_.max_deviation = std::max(report_.max_deviation, std::abs(deviation));
    ++report_.evaluations;
  }
  IdentityReport report() const { return report_; }

 private:
  IdentityReport report_;
};

}  // namespace

std::vector<IdentityReport> run_identity_suite(std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const double zeta3 = dirichlet_constants().zeta3;

  Tracker conj_d("D(conj z) = -D(z)");
  Tracker inv_d("D(1/z) = -D(z)");
  Tracker refl_d("D(1-z) = -D(z)");
  Tracker mean_d("D three-term mean");
  Tracker conj_p3("P3(conj z) = P3(z)");
  Tracker inv_p3("P3(1/z) = P3(z)");
  Tracker three_p3_real("P3(z)+P3(1-z)+P3(1-1/z) = zeta(3), real z");
  Tracker three_p3_cplx("P3(z)+P3(1-z)+P3(1-1/z) = zeta(3), complex z");

  for (std::size_t i = 0; i < samples; ++i) {
    const Complex z = annulus_point(rng);
    const double d = bloch_wigner(z);
    conj_d.observe(bloch_wigner(std::conj(z)) + d);
    inv_d.observe(bloch_wigner(1.0 / z) + d);
    refl_d.observe(bloch_wigner(1.0 - z) + d);
    const Complex zb = std::conj(z);
    const double mean = 0.5 * (bloch_wigner(z / zb) + bloch_wigner((1.0 - 1.0 / z) / (1.0 - 1.0 / zb)) +
                               bloch_wigner((1.0 - zb) / (1.0 - z)));
    mean_d.observe(d - mean);

    const double p = zagier_p3(z);
    conj_p3.observe(zagier_p3(zb) - p);
    inv_p3.observe(zagier_p3(1.0 / z) - p);
    three_p3_cplx.observe(p + zagier_p3(1.0 - z) + zagier_p3(1.0 - 1.0 / z) - zeta3);

    const double x = 1e-6 + (1.0 - 2e-6) * unit_uniform(rng);
    three_p3_real.observe(zagier_p3(x) + zagier_p3(1.0 - x) + zagier_p3(1.0 - 1.0 / x) - zeta3);
  }

  Tracker circle("D(e^{2i theta}) = -2 int_0^theta log|2 sin t| dt");
  boost::math::quadrature::tanh_sinh<double> integrator;
  for (int k = 1; k <= 15; ++k) {
    const double theta = 0.1 * k;
    const double integral =
        integrator.integrate([](double t) { return std::log(2.0 * std::sin(t)); }, 0.0, theta);
    circle.observe(bloch_wigner(std::polar(1.0, 2.0 * theta)) + 2.0 * integral);
  }

  Tracker p3_half("P3(1/2) = 7 zeta(3)/8");
  p3_half.observe(zagier_p3(0.5) - 7.0 * zeta3 / 8.0);
  Tracker li3_minus_one("Li3(-1) = -3 zeta(3)/4");
  li3_minus_one.observe(std::abs(li(3, -1.0) + 0.75 * zeta3));

  return {conj_d.report(),  inv_d.report(),         refl_d.report(),        mean_d.report(),
          circle.report(),  conj_p3.report(),       inv_p3.report(),        three_p3_real.report(),
          three_p3_cplx.report(), p3_half.report(), li3_minus_one.report()};
}

}  // namespace resmahler::special
