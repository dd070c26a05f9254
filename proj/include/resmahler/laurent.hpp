#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "resmahler/errors.hpp"
#include "resmahler/exact.hpp"

namespace resmahler {

using Exponent = std::vector<int>;

/// Sparse multivariate Laurent polynomial in a fixed number of variables.
///
/// Terms are keyed by exponent vectors of length num_vars(); zero
/// coefficients are never stored, so the zero polynomial has no terms.
template <class Coeff>
class LaurentPolynomial {
 public:
  using TermMap = std::map<Exponent, Coeff>;

  explicit LaurentPolynomial(std::size_t num_vars = 0) : vars_(num_vars) {}

  static LaurentPolynomial constant(const Coeff& c, std::size_t num_vars) {
    LaurentPolynomial p(num_vars);
    p.add_term(Exponent(num_vars, 0), c);
    return p;
  }
  static LaurentPolynomial variable(std::size_t index, std::size_t num_vars) {
    if (index >= num_vars) throw InputError("variable index out of range");
    Exponent e(num_vars, 0);
    e[index] = 1;
    LaurentPolynomial p(num_vars);
    p.add_term(e, Coeff(1));
    return p;
  }
  static LaurentPolynomial monomial(const Exponent& e, const Coeff& c) {
    LaurentPolynomial p(e.size());
    p.add_term(e, c);
    return p;
  }

  void add_term(const Exponent& e, const Coeff& c) {
    if (e.size() != vars_) throw InputError("exponent length does not match variable count");
    if (c == Coeff{}) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == Coeff{}) terms_.erase(it);
    }
  }

  std::size_t num_vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Coeff coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coeff{} : it->second;
  }

  // Exact evaluation; negative exponents need invertible arguments.
  Coeff evaluate(std::span<const Coeff> point) const {
    if (point.size() != vars_) throw InputError("evaluation point has wrong dimension");
    Coeff acc{};
    for (const auto& [e, c] : terms_) {
      Coeff term = c;
      for (std::size_t i = 0; i < vars_; ++i) {
        const int k = e[i];
        const Coeff base = k >= 0 ? point[i] : Coeff(1) / point[i];
        for (int j = 0; j < (k >= 0 ? k : -k); ++j) term *= base;
      }
      acc += term;
    }
    return acc;
  }

  LaurentPolynomial& operator+=(const LaurentPolynomial& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPolynomial& operator-=(const LaurentPolynomial& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator-(const LaurentPolynomial& a) {
    LaurentPolynomial r(a.vars_);
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
    return r;
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    a.check_compatible(b);
    LaurentPolynomial r(a.vars_);
    Exponent e(a.vars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < a.vars_; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }

  LaurentPolynomial pow(unsigned k) const {
    LaurentPolynomial result = constant(Coeff(1), vars_);
    LaurentPolynomial base = *this;
    while (k > 0) {
      if (k & 1U) result = result * base;
      k >>= 1U;
      if (k > 0) base = base * base;
    }
    return result;
  }

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

 private:
  void check_compatible(const LaurentPolynomial& o) const {
    if (o.vars_ != vars_) throw InputError("polynomials have different variable counts");
  }

  std::size_t vars_;
  TermMap terms_;
};

using RationalLaurent = LaurentPolynomial<Rational>;
using ComplexLaurent = LaurentPolynomial<std::complex<double>>;

ComplexLaurent to_complex(const RationalLaurent& p);

/// Polynomial text together with the variable names it was written in.
/// Variable i of `poly` is `variables[i]`; names are sorted.
struct ParsedPolynomial {
  RationalLaurent poly;
  std::vector<std::string> variables;
};

/// Parses text such as `3*x^2*y^-1 - 1/2*(x+1)^3`.
///
/// Grammar: sums and differences of products joined by explicit `*`;
/// factors are integer, rational (`a/b`) or decimal literals, identifiers,
/// or parenthesized sums, each optionally raised to an integer power with
/// `^`. Negative powers are accepted only on monomials. Throws InputError.
ParsedPolynomial parse_polynomial(std::string_view text);

std::string to_string(const RationalLaurent& p, const std::vector<std::string>& variables);

}  // namespace resmahler
