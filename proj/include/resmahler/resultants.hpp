#pragma once

#include "resmahler/exact.hpp"
#include "resmahler/laurent.hpp"
#include "resmahler/univariate.hpp"

namespace resmahler {

/// Determinant of the Sylvester matrix of f and g (rows of f first), exact.
/// A constant argument c of the pair gives c^(degree of the other).
/// Throws DomainError if either input is zero or both are constant.
Rational sylvester_resultant(const RationalPoly& f, const RationalPoly& g);

/// The pair f = A + B t^p + t^q, g = C + E t^p + t^q with 0 < p < q and
/// gcd(p, q) = 1.
struct TrinomialPair {
  int p;
  int q;
  Rational A;
  Rational B;
  Rational C;
  Rational E;

  /// Throws InputError unless 0 < p < q and gcd(p, q) = 1.
  void validate() const;
  RationalPoly f() const;
  RationalPoly g() const;
};

/// Res(f, g) = (C - A)^q - (EA - BC)^p (B - E)^(q-p).
Rational trinomial_resultant_closed(const TrinomialPair& tp);

/// det [[a, b, c], [d, e, f], [g, h, i]] in the variables a..i (index 0..8).
RationalLaurent det3_resultant();

/// (x - 1)(y - 1) - (z - 1)(w - 1) expanded, variables ordered (x, y, z, w).
RationalLaurent dim4_reduced_poly();

/// 1 + s_1 + ... + s_ell in ell variables. Throws InputError if ell < 1.
RationalLaurent general_row_resultant_mm_form(int ell);

/// Z (C - 1)^q - (E - C)^p (1 - E)^(q-p), variables ordered (Z, C, E): a
/// three-variable polynomial with the same Mahler measure as the resultant of
/// two generic trinomials with support {0, p, q}.
RationalLaurent trinomial_reduced_poly(int p, int q);

/// Resultant of a0 + a1 t^p + a2 t^q and b0 + b1 t^p + b2 t^q as a polynomial
/// in (a0, a1, a2, b0, b1, b2):
///   (a2 b0 - a0 b2)^q - (a0 b1 - a1 b0)^p (a1 b2 - a2 b1)^(q-p).
RationalLaurent trinomial_resultant_poly(int p, int q);

}  // namespace resmahler
