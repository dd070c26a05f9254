#pragma once

#include <complex>
#include <string>
#include <variant>
#include <vector>

#include "resmahler/exact.hpp"

namespace resmahler {

struct Zeta3 {
  friend bool operator==(const Zeta3&, const Zeta3&) = default;
};
// L'(chi_{-3}, -1).
struct LPrimeChi3 {
  friend bool operator==(const LPrimeChi3&, const LPrimeChi3&) = default;
};
// Zagier's P_3 at an algebraic point; `label` names the point symbolically.
struct P3At {
  std::string label;
  std::complex<double> point;
  friend bool operator==(const P3At&, const P3At&) = default;
};
// Bloch-Wigner D at a point.
struct DAt {
  std::string label;
  std::complex<double> point;
  friend bool operator==(const DAt&, const DAt&) = default;
};
// Natural log of a positive real.
struct LogOf {
  std::string label;
  double argument;
  friend bool operator==(const LogOf&, const LogOf&) = default;
};
struct PiPow {
  int power;
  friend bool operator==(const PiPow&, const PiPow&) = default;
};

using ConstantFactor = std::variant<Zeta3, LPrimeChi3, P3At, DAt, LogOf, PiPow>;

double evaluate(const ConstantFactor& f);
std::string to_string(const ConstantFactor& f);

/// coefficient * (product of factors); an empty product is 1.
struct ClosedFormTerm {
  Rational coefficient;
  std::vector<ConstantFactor> factors;

  double numeric() const;
  friend bool operator==(const ClosedFormTerm&, const ClosedFormTerm&) = default;
};

/// Exact linear combination of products of named constants, with its
/// double realization. The empty combination is exactly 0.
class ClosedFormValue {
 public:
  ClosedFormValue() = default;
  explicit ClosedFormValue(std::vector<ClosedFormTerm> terms);

  const std::vector<ClosedFormTerm>& terms() const { return terms_; }
  double numeric() const { return numeric_; }
  bool is_zero() const { return terms_.empty(); }

  /// Every coefficient multiplied by c (exactly).
  ClosedFormValue scaled(const Rational& c) const;

  /// Human-readable sum, e.g. "9/2 * zeta(3) * pi^-2".
  std::string to_string() const;

  friend bool operator==(const ClosedFormValue& a, const ClosedFormValue& b) { return a.terms_ == b.terms_; }

 private:
  std::vector<ClosedFormTerm> terms_;
  double numeric_ = 0.0;
};

}  // namespace resmahler
