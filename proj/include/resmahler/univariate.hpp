#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "resmahler/errors.hpp"
#include "resmahler/exact.hpp"

namespace resmahler {

/// Dense univariate polynomial; coeffs[k] multiplies t^k.
///
/// Trailing zeros are trimmed on every mutation so the leading coefficient
/// of a nonzero polynomial is never zero. The zero polynomial has degree -1.
template <class Coeff>
class UnivariatePoly {
 public:
  UnivariatePoly() = default;
  explicit UnivariatePoly(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  UnivariatePoly(std::initializer_list<Coeff> coeffs) : coeffs_(coeffs) { trim(); }

  static UnivariatePoly monomial(const Coeff& c, std::size_t k) {
    std::vector<Coeff> v(k + 1, Coeff{});
    v[k] = c;
    return UnivariatePoly(std::move(v));
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  Coeff coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Coeff{}; }
  const Coeff& leading() const {
    if (is_zero()) throw DomainError("leading coefficient of the zero polynomial");
    return coeffs_.back();
  }
  std::span<const Coeff> coefficients() const { return coeffs_; }

  template <class T>
  T evaluate(const T& t) const {
    T acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + T(*it);
    return acc;
  }

  UnivariatePoly derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Coeff> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * Coeff(static_cast<int>(k));
    return UnivariatePoly(std::move(d));
  }

  UnivariatePoly& operator+=(const UnivariatePoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Coeff{});
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
  }
  UnivariatePoly& operator-=(const UnivariatePoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Coeff{});
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
  }
  friend UnivariatePoly operator+(UnivariatePoly a, const UnivariatePoly& b) { return a += b; }
  friend UnivariatePoly operator-(UnivariatePoly a, const UnivariatePoly& b) { return a -= b; }
  friend UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> r(a.coeffs_.size() + b.coeffs_.size() - 1, Coeff{});
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UnivariatePoly(std::move(r));
  }
  friend UnivariatePoly operator*(const Coeff& c, UnivariatePoly p) {
    for (auto& x : p.coeffs_) x *= c;
    p.trim();
    return p;
  }

  friend bool operator==(const UnivariatePoly&, const UnivariatePoly&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == Coeff{}) coeffs_.pop_back();
  }

  std::vector<Coeff> coeffs_;
};

using RationalPoly = UnivariatePoly<Rational>;
using ComplexPoly = UnivariatePoly<std::complex<double>>;

ComplexPoly to_complex(const RationalPoly& f);

/// Exact division with remainder over Q. Throws DomainError when b is zero.
std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& a, const RationalPoly& b);

/// Monic gcd over Q (zero if both inputs are zero).
RationalPoly gcd(const RationalPoly& a, const RationalPoly& b);

/// Square-free part f / gcd(f, f'), scaled to a primitive integer polynomial
/// with positive leading coefficient.
RationalPoly squarefree_primitive_part(const RationalPoly& f);

}  // namespace resmahler
