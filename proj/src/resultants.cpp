#include "resmahler/resultants.hpp"

#include <numeric>

#include "resmahler/errors.hpp"

namespace resmahler {
namespace {

// Smallest positive integer c with c * f integral.
Integer denominator_lcm(const RationalPoly& f) {
  Integer l = 1;
  for (const auto& c : f.coefficients()) l = boost::multiprecision::lcm(l, denominator(c));
  return l;
}

Rational power(Rational base, unsigned k) {
  Rational r = 1;
  while (k > 0) {
    if (k & 1U) r *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return r;
}

}  // namespace

Rational sylvester_resultant(const RationalPoly& f, const RationalPoly& g) {
  if (f.is_zero() || g.is_zero()) throw DomainError("resultant of a zero polynomial");
  const int m = f.degree();
  const int n = g.degree();
  if (m == 0 && n == 0) throw DomainError("resultant of two constant polynomials");

  // Res(cf f, cg g) = cf^n cg^m Res(f, g); work with integer multiples.
  const Integer cf = denominator_lcm(f);
  const Integer cg = denominator_lcm(g);
  const std::size_t size = static_cast<std::size_t>(m + n);
  IntegerMatrix s(size, std::vector<Integer>(size, 0));
  auto integral = [](const Rational& r, const Integer& c) { return Integer(numerator(r) * (c / denominator(r))); };
  for (int row = 0; row < n; ++row)
    for (int k = 0; k <= m; ++k)
      s[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + k)] = integral(f.coefficient(m - k), cf);
  for (int row = 0; row < m; ++row)
    for (int k = 0; k <= n; ++k)
      s[static_cast<std::size_t>(n + row)][static_cast<std::size_t>(row + k)] = integral(g.coefficient(n - k), cg);

  const Integer det = bareiss_determinant(std::move(s));
  const Integer scale = boost::multiprecision::pow(cf, static_cast<unsigned>(n)) *
                        boost::multiprecision::pow(cg, static_cast<unsigned>(m));
  return Rational(det, scale);
}

void TrinomialPair::validate() const {
  if (p <= 0 || q <= p) throw InputError("trinomial support {0, p, q} needs 0 < p < q");
  if (std::gcd(p, q) != 1) throw InputError("trinomial support {0, p, q} needs gcd(p, q) = 1");
}

RationalPoly TrinomialPair::f() const {
  validate();
  std::vector<Rational> c(static_cast<std::size_t>(q + 1));
  c[0] = A;
  c[static_cast<std::size_t>(p)] = B;
  c[static_cast<std::size_t>(q)] = 1;
  return RationalPoly(std::move(c));
}

RationalPoly TrinomialPair::g() const {
  validate();
  std::vector<Rational> c(static_cast<std::size_t>(q + 1));
  c[0] = C;
  c[static_cast<std::size_t>(p)] = E;
  c[static_cast<std::size_t>(q)] = 1;
  return RationalPoly(std::move(c));
}

Rational trinomial_resultant_closed(const TrinomialPair& tp) {
  tp.validate();
  const auto q = static_cast<unsigned>(tp.q);
  const auto p = static_cast<unsigned>(tp.p);
  return power(tp.C - tp.A, q) - power(tp.E * tp.A - tp.B * tp.C, p) * power(tp.B - tp.E, q - p);
}

RationalLaurent det3_resultant() {
  // Leibniz expansion over the six permutations of {0, 1, 2}.
  static constexpr int kPerms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
  RationalLaurent det(9);
  for (int k = 0; k < 6; ++k) {
    Exponent e(9, 0);
    for (int row = 0; row < 3; ++row) e[static_cast<std::size_t>(3 * row + kPerms[k][row])] = 1;
    det.add_term(e, k < 3 ? Rational(1) : Rational(-1));
  }
  return det;
}

RationalLaurent dim4_reduced_poly() {
  auto var = [](std::size_t i) { return RationalLaurent::variable(i, 4); };
  const RationalLaurent one = RationalLaurent::constant(1, 4);
  return (var(0) - one) * (var(1) - one) - (var(2) - one) * (var(3) - one);
}

RationalLaurent general_row_resultant_mm_form(int ell) {
  if (ell < 1) throw InputError("general row form needs ell >= 1");
  const auto d = static_cast<std::size_t>(ell);
  RationalLaurent p = RationalLaurent::constant(1, d);
  for (std::size_t i = 0; i < d; ++i) p += RationalLaurent::variable(i, d);
  return p;
}

RationalLaurent trinomial_reduced_poly(int p, int q) {
  TrinomialPair{p, q, 0, 0, 0, 0}.validate();
  auto var = [](std::size_t i) { return RationalLaurent::variable(i, 3); };
  const RationalLaurent one = RationalLaurent::constant(1, 3);
  const RationalLaurent z = var(0);
  const RationalLaurent c = var(1);
  const RationalLaurent e = var(2);
  return z * (c - one).pow(static_cast<unsigned>(q)) -
         (e - c).pow(static_cast<unsigned>(p)) * (one - e).pow(static_cast<unsigned>(q - p));
}

RationalLaurent trinomial_resultant_poly(int p, int q) {
  TrinomialPair{p, q, 0, 0, 0, 0}.validate();
  auto var = [](std::size_t i) { return RationalLaurent::variable(i, 6); };
  const RationalLaurent a0 = var(0), a1 = var(1), a2 = var(2);
  const RationalLaurent b0 = var(3), b1 = var(4), b2 = var(5);
  return (a2 * b0 - a0 * b2).pow(static_cast<unsigned>(q)) -
         (a0 * b1 - a1 * b0).pow(static_cast<unsigned>(p)) * (a1 * b2 - a2 * b1).pow(static_cast<unsigned>(q - p));
}

}  // namespace resmahler
