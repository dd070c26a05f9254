#pragma once

#include <initializer_list>
#include <vector>

#include "resmahler/laurent.hpp"
#include "resmahler/univariate.hpp"

namespace resmahler::test {

// Coefficients from the constant term upward.
inline RationalPoly poly(std::initializer_list<long> coeffs) {
  std::vector<Rational> c;
  for (long v : coeffs) c.emplace_back(v);
  return RationalPoly(std::move(c));
}

inline RationalLaurent laurent(std::string_view text) { return parse_polynomial(text).poly; }

}  // namespace resmahler::test
