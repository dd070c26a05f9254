#include <cstdlib>

#include "resmahler/laurent.hpp"
#include "resmahler/univariate.hpp"

namespace resmahler {

ComplexPoly to_complex(const RationalPoly& f) {
  std::vector<std::complex<double>> c;
  c.reserve(f.coefficients().size());
  for (const auto& r : f.coefficients()) c.emplace_back(to_double(r), 0.0);
  return ComplexPoly(std::move(c));
}

ComplexLaurent to_complex(const RationalLaurent& p) {
  ComplexLaurent r(p.num_vars());
  for (const auto& [e, c] : p.terms()) r.add_term(e, {to_double(c), 0.0});
  return r;
}

std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& a, const RationalPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> rem(a.coefficients().begin(), a.coefficients().end());
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) return {RationalPoly{}, a};
  std::vector<Rational> quo(static_cast<std::size_t>(da - db + 1));
  const Rational& lead = b.leading();
  for (int k = da - db; k >= 0; --k) {
    const Rational factor = rem[static_cast<std::size_t>(k + db)] / lead;
    quo[static_cast<std::size_t>(k)] = factor;
    if (factor == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= factor * b.coefficient(j);
  }
  return {RationalPoly(std::move(quo)), RationalPoly(std::move(rem))};
}

RationalPoly gcd(const RationalPoly& a, const RationalPoly& b) {
  RationalPoly x = a;
  RationalPoly y = b;
  while (!y.is_zero()) {
    RationalPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return Rational(1) / x.leading() * x;
}

RationalPoly squarefree_primitive_part(const RationalPoly& f) {
  if (f.is_zero()) throw DomainError("square-free part of the zero polynomial");
  RationalPoly s = f.degree() > 0 ? divmod(f, gcd(f, f.derivative())).first : f;
  // Clear denominators, then divide by the content.
  Integer den = 1;
  for (const auto& c : s.coefficients()) den = boost::multiprecision::lcm(den, denominator(c));
  std::vector<Integer> ints;
  Integer content = 0;
  for (const auto& c : s.coefficients()) {
    ints.push_back(numerator(c) * (den / denominator(c)));
    content = boost::multiprecision::gcd(content, ints.back());
  }
  if (ints.back() < 0) content = -content;
  std::vector<Rational> out;
  out.reserve(ints.size());
  for (const auto& v : ints) out.emplace_back(v / content);
  return RationalPoly(std::move(out));
}

}  // namespace resmahler
