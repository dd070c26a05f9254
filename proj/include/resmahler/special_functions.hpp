#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace resmahler::special {

using Complex = std::complex<double>;

/// Polylogarithm Li_q(z) for q in {1, 2, 3} on the principal branch.
///
/// Li_1(z) = -log(1 - z). For q = 2, 3 the function is continued to the
/// plane cut along the real interval (1, inf); points on the cut raise
/// DomainError, as does z = 1 for q = 1. Non-finite input also raises
/// DomainError. Relative accuracy is about 1e-14 for |z| <= 1.
Complex li(int q, Complex z);

/// Bloch-Wigner dilogarithm D(z) = Im Li_2(z) + log|z| arg(1 - z).
/// Real-analytic off {0, 1, inf} and continuous everywhere; returns 0 at
/// (and within 1e-14 of) 0 and 1.
double bloch_wigner(Complex z);

/// Zagier's single-valued trilogarithm
///   P_3(z) = Re(Li_3(z) - log|z| Li_2(z) + (1/3) log^2|z| Li_1(z)).
/// Continuous on the Riemann sphere: P_3(0) = 0, P_3(1) = zeta(3).
double zagier_p3(Complex z);

struct ConstantsTable {
  double zeta3;           // zeta(3)
  double l_chi3_2;        // L(chi_{-3}, 2)
  double lprime_chi3_m1;  // L'(chi_{-3}, -1) = 3 sqrt(3) / (4 pi) * L(chi_{-3}, 2)
};

/// Computed once on first use; safe to share.
const ConstantsTable& dirichlet_constants();

/// Odd character of conductor 3.
int chi_minus3(long h);

/// Maximum absolute deviation of one functional identity over a sample.
struct IdentityReport {
  std::string name;
  double max_deviation;
  std::size_t evaluations;
};

/// Runs the dilogarithm/trilogarithm identity checks: conjugation,
/// inversion and reflection of D, the three-term mean of D, the unit-circle
/// integral representation of D (against tanh-sinh quadrature), symmetries
/// of P_3, the three-term relation of P_3, and the special values
/// P_3(1/2) = 7 zeta(3)/8 and Li_3(-1) = -3 zeta(3)/4.
///
/// Random points are drawn from 0.1 < |z| < 10 off the real axis with a
/// generator seeded by `seed`.
std::vector<IdentityReport> run_identity_suite(std::size_t samples, std::uint64_t seed);

}  // namespace resmahler::special
