#include "resmahler/theorem_evaluators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <string>

#include "resmahler/errors.hpp"
#include "resmahler/resultants.hpp"

namespace resmahler {
namespace {

constexpr int kMaxBisectionSteps = 200;
constexpr double kRootResidual = 1e-14;

MahlerEstimate scaled(MahlerEstimate e, double c) {
  e.value *= c;
  e.std_error *= std::abs(c);
  return e;
}

// Unique root of a function increasing on [lo, hi] with a sign change.
template <class F, class DF>
double increasing_root(F f, DF df, double lo, double hi) {
  for (int i = 0; i < kMaxBisectionSteps; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (f(mid) < 0.0 ? lo : hi) = mid;
  }
  double x = 0.5 * (lo + hi);
  for (int i = 0; i < 3; ++i) {
    const double candidate = x - f(x) / df(x);
    if (!(std::abs(f(candidate)) < std::abs(f(x)))) break;
    x = candidate;
  }
  return x;
}

std::vector<int> first_coordinates(const Support& s) {
  std::set<int> firsts;
  for (const auto& pt : s.points()) firsts.insert(pt.front());
  return {firsts.begin(), firsts.end()};
}

std::string power_label(const char* base, int k) {
  return k == 1 ? std::string(base) : std::string(base) + "^" + std::to_string(k);
}

}  // namespace

CrossCheck compare(double closed, const MahlerEstimate& numeric) {
  const double diff = numeric.value - closed;
  return {closed, numeric, diff, std::abs(diff) <= 3.0 * numeric.std_error};
}

ClosedFormValue mm_dim1() { return ClosedFormValue(); }

CrossCheck cross_check_dim1(const QmcOptions& options) {
  const RationalLaurent x_minus_y = parse_polynomial("x - y").poly;
  return compare(mm_dim1().numeric(), mm_qmc(x_minus_y, options));
}

bool kronecker_is_mm_zero(const RationalPoly& f, double tol) {
  if (f.is_zero()) throw DomainError("the zero polynomial has no Mahler measure");
  const auto coeffs = f.coefficients();
  for (const auto& c : coeffs)
    if (!is_integer(c)) throw InputError("Kronecker test needs integer coefficients");

  std::size_t low = 0;
  while (coeffs[low] == 0) ++low;
  const RationalPoly g(std::vector<Rational>(coeffs.begin() + static_cast<std::ptrdiff_t>(low), coeffs.end()));
  if (abs(g.leading()) != 1 || abs(g.coefficient(0)) != 1) return false;
  if (g.degree() == 0) return true;
  return mm_jensen(squarefree_primitive_part(g)).value <= tol;
}

ClosedFormValue mm_dim2(long eta) {
  if (eta < 1) throw InputError("eta must be at least 1");
  return ClosedFormValue({{Rational(eta), {LPrimeChi3{}}}});
}

CrossCheck cross_check_dim2(long eta, const QmcOptions& options) {
  const ClosedFormValue closed = mm_dim2(eta);
  const MahlerEstimate m = mm_qmc(general_row_resultant_mm_form(2), options);
  return compare(closed.numeric(), scaled(m, static_cast<double>(eta)));
}

std::optional<ClosedFormValue> general_row_closed_form(int ell) {
  switch (ell) {
    case 2:
      return ClosedFormValue();
    case 3:
      return ClosedFormValue({{Rational(1), {LPrimeChi3{}}}});
    case 4:
      return ClosedFormValue({{Rational(7, 2), {Zeta3{}, PiPow{-2}}}});
    default:
      return std::nullopt;
  }
}

MahlerEstimate mm_general_row(long eta, int ell, const QmcOptions& options) {
  if (eta < 1) throw InputError("eta must be at least 1");
  if (ell < 2) throw InputError("ell must be at least 2");
  if (auto closed = general_row_closed_form(ell))
    return MahlerEstimate::exact(closed->scaled(Rational(eta)).numeric(), MahlerMethod::kClosedForm);
  return scaled(mm_qmc(general_row_resultant_mm_form(ell - 1), options), static_cast<double>(eta));
}

std::optional<CrossCheck> cross_check_general_row(long eta, int ell, const QmcOptions& options) {
  if (eta < 1) throw InputError("eta must be at least 1");
  if (ell < 2) throw InputError("ell must be at least 2");
  const auto closed = general_row_closed_form(ell);
  if (!closed) return std::nullopt;
  const MahlerEstimate m = mm_qmc(general_row_resultant_mm_form(ell - 1), options);
  return compare(closed->scaled(Rational(eta)).numeric(), scaled(m, static_cast<double>(eta)));
}

std::optional<std::pair<int, int>> Dim3Reduction::trinomial_normal_form() const {
  if (support0 != support1 || support0.size() != 3 || support0[0] != 0) return std::nullopt;
  const int p = support0[1];
  const int q = support0[2];
  if (std::gcd(p, q) != 1) return std::nullopt;
  return std::make_pair(p, q);
}

Dim3Reduction mm_dim3_reduction(const SupportFamily& family) {
  require_two_point_supports(family);
  if (classify_family(family) != FamilyClass::kDimThreeB)
    throw DomainError("family is not of the two-trinomial shape");
  Dim3Reduction r;
  r.eta = eta_of_binomial_rows(family, true);
  r.multiplier = binomial_root_count(family, true);
  std::vector<std::vector<int>*> slots{&r.support0, &r.support1};
  std::size_t next = 0;
  for (std::size_t i = 0; i < family.supports().size(); ++i) {
    const Support& s = family.supports()[i];
    if (s.cardinality() != 3) continue;
    *slots[next] = first_coordinates(s);
    if (slots[next]->size() < 2)
      throw DomainError("support A_" + std::to_string(i) + " has a single first coordinate; the family is not essential");
    ++next;
  }
  return r;
}

TrinomialRoots solve_trinomial_roots(int p, int q) {
  TrinomialPair{p, q, 0, 0, 0, 0}.validate();
  const double dp = p;
  const double dq = q;
  auto f = [&](double x) { return std::pow(x, dq) + std::pow(x, dq - dp) - 1.0; };
  auto df = [&](double x) { return dq * std::pow(x, dq - 1.0) + (dq - dp) * std::pow(x, dq - dp - 1.0); };
  auto g = [&](double x) { return std::pow(x, dq) - std::pow(x, dq - dp) - 1.0; };
  auto dg = [&](double x) { return dq * std::pow(x, dq - 1.0) - (dq - dp) * std::pow(x, dq - dp - 1.0); };
  TrinomialRoots r{p, q, increasing_root(f, df, 0.0, 1.0), increasing_root(g, dg, 1.0, 2.0)};
  if (std::abs(f(r.phi_small)) > kRootResidual || std::abs(g(r.phi_large)) > kRootResidual)
    throw DomainError("trinomial root did not reach the residual tolerance");
  return r;
}

ClosedFormValue mm_trinomial_closed(int p, int q) {
  const TrinomialRoots r = solve_trinomial_roots(p, q);
  const double phi = r.phi_small;
  const double big = r.phi_large;
  auto term = [](int coeff, std::string label, double point) {
    return ClosedFormTerm{Rational(2 * coeff), {P3At{std::move(label), point}, PiPow{-2}}};
  };
  return ClosedFormValue({
      term(-p, power_label("phi", q), std::pow(phi, q)),
      term(-q, "-" + power_label("phi", p), -std::pow(phi, p)),
      term(p, power_label("Phi", q), std::pow(big, q)),
      term(q, power_label("Phi", p), std::pow(big, p)),
  });
}

CrossCheck cross_check_trinomial(int p, int q, const QmcOptions& options, bool full) {
  const ClosedFormValue closed = mm_trinomial_closed(p, q);
  const RationalLaurent poly = full ? trinomial_resultant_poly(p, q) : trinomial_reduced_poly(p, q);
  return compare(closed.numeric(), mm_qmc(poly, options));
}

ClosedFormValue mm_dim4_det() { return ClosedFormValue({{Rational(9, 2), {Zeta3{}, PiPow{-2}}}}); }

CrossCheck cross_check_dim4(const QmcOptions& options, bool full) {
  const RationalLaurent poly = full ? det3_resultant() : dim4_reduced_poly();
  return compare(mm_dim4_det().numeric(), mm_qmc(poly, options));
}

SmythDiagnostic smyth_asymptotic_check(int ell, const QmcOptions& options) {
  if (ell < 4) throw InputError("the asymptotic check needs ell >= 4");
  const MahlerEstimate m = mm_qmc(general_row_resultant_mm_form(ell), options);
  const double asymptotic = 0.5 * std::log(ell + 1.0) - 0.5 * std::numbers::egamma;
  return {ell, m, asymptotic, m.value - asymptotic};
}

}  // namespace resmahler
