#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "resmahler/closed_form.hpp"
#include "resmahler/lattice_geometry.hpp"
#include "resmahler/mahler_numeric.hpp"
#include "resmahler/univariate.hpp"

namespace resmahler {

/// Closed value against an independent numerical estimate.
/// pass = |closed - numeric| <= 3 * std_error.
struct CrossCheck {
  double closed = 0.0;
  MahlerEstimate numeric;
  double difference = 0.0;
  bool pass = false;
};

CrossCheck compare(double closed, const MahlerEstimate& numeric);

// ---------------------------------------------------------------------------
// Every k_i = 2

/// The resultant is a binomial X^a - X^b up to sign, so its measure is 0.
ClosedFormValue mm_dim1();

/// m(x - y) by QMC, to be compared with 0.
CrossCheck cross_check_dim1(const QmcOptions& options);

/// Whether an integer polynomial has Mahler measure zero, i.e. is +-t^k
/// times a product of cyclotomic polynomials.
///
/// The leading and trailing coefficients must be +-1; then the squarefree
/// part is tested with mm_jensen(.) <= tol. This is a numerical criterion:
/// positive measures of small-degree integer polynomials sit far above the
/// default tolerance, but no bound is proven for arbitrary degree.
/// Throws InputError on non-integer coefficients and DomainError on 0.
bool kronecker_is_mm_zero(const RationalPoly& f, double tol = 1e-9);

// ---------------------------------------------------------------------------
// One trinomial row

/// eta * L'(chi_{-3}, -1). Throws InputError if eta < 1.
///
/// Pass binomial_root_count(family) for a family with several binomial
/// rows; the sum of the eta_i overcounts once there are two or more.
ClosedFormValue mm_dim2(long eta);

/// eta * m(1 + x + y) by QMC against mm_dim2(eta).
CrossCheck cross_check_dim2(long eta, const QmcOptions& options);

// ---------------------------------------------------------------------------
// One row with ell monomials

/// m(1 + s_1 + ... + s_{ell-1}) in closed form for ell in {2, 3, 4}.
std::optional<ClosedFormValue> general_row_closed_form(int ell);

/// eta * m(1 + s_1 + ... + s_{ell-1}): closed form for ell <= 4, QMC
/// otherwise (std_error scaled by eta). Throws InputError if eta < 1 or
/// ell < 2.
MahlerEstimate mm_general_row(long eta, int ell, const QmcOptions& options);

/// Closed form against QMC for ell <= 4; nullopt when there is no closed form.
std::optional<CrossCheck> cross_check_general_row(long eta, int ell, const QmcOptions& options);

// ---------------------------------------------------------------------------
// Two trinomial rows

/// Outcome of projecting the two trinomial supports to their first
/// coordinates.
struct Dim3Reduction {
  int eta = 0;          // sum of the binomial eta_i
  long multiplier = 1;  // product of the binomial eta_i: common roots of the binomial rows
  std::vector<int> support0;  // distinct first coordinates of the first trinomial support
  std::vector<int> support1;

  /// (p, q) if both projected supports equal {0, p, q} with 0 < p < q coprime.
  std::optional<std::pair<int, int>> trinomial_normal_form() const;
};

/// Requires a DimThreeB family whose binomial supports are {0, eta_i e_j}
/// with j != 1 (DomainError otherwise), and projected supports with at
/// least two points (DomainError).
Dim3Reduction mm_dim3_reduction(const SupportFamily& family);

struct TrinomialRoots {
  int p;
  int q;
  double phi_small;  // root of x^q + x^(q-p) - 1 in (0, 1)
  double phi_large;  // root of x^q - x^(q-p) - 1 in (1, 2)
};

/// Bisection then Newton polish to residual <= 1e-14. Throws InputError
/// unless 0 < p < q and gcd(p, q) = 1.
TrinomialRoots solve_trinomial_roots(int p, int q);

/// (2/pi^2)(-p P3(phi^q) - q P3(-phi^p) + p P3(Phi^q) + q P3(Phi^p)), the
/// Mahler measure of the resultant of two generic trinomials supported on
/// {0, p, q}, with phi = phi_small and Phi = phi_large.
ClosedFormValue mm_trinomial_closed(int p, int q);

/// QMC of the three-variable reduced polynomial, or with `full` of the
/// six-variable resultant, against mm_trinomial_closed.
CrossCheck cross_check_trinomial(int p, int q, const QmcOptions& options, bool full = false);

// ---------------------------------------------------------------------------
// Three copies of the standard triangle in Z^2

/// (9/2) zeta(3) / pi^2.
ClosedFormValue mm_dim4_det();

/// QMC of (x-1)(y-1) - (z-1)(w-1), or with `full` of the generic 3x3
/// determinant in nine variables, against mm_dim4_det.
CrossCheck cross_check_dim4(const QmcOptions& options, bool full = false);

// ---------------------------------------------------------------------------

/// Informational comparison of m(1 + s_1 + ... + s_ell) with its large-ell
/// asymptotic (1/2) log(ell + 1) - gamma / 2. No pass/fail.
struct SmythDiagnostic {
  int ell;
  MahlerEstimate estimate;
  double asymptotic;
  double deviation;  // estimate - asymptotic
};

/// Throws InputError if ell < 4.
SmythDiagnostic smyth_asymptotic_check(int ell, const QmcOptions& options);

}  // namespace resmahler
