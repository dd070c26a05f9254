#include "resmahler/closed_form.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "resmahler/errors.hpp"
#include "resmahler/special_functions.hpp"

namespace resmahler {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

double evaluate(const ConstantFactor& f) {
  return std::visit(
      Overloaded{
          [](const Zeta3&) { return special::dirichlet_constants().zeta3; },
          [](const LPrimeChi3&) { return special::dirichlet_constants().lprime_chi3_m1; },
          [](const P3At& p) { return special::zagier_p3(p.point); },
          [](const DAt& d) { return special::bloch_wigner(d.point); },
          [](const LogOf& l) {
            if (!(l.argument > 0.0)) throw DomainError("log of a non-positive constant");
            return std::log(l.argument);
          },
          [](const PiPow& p) { return std::pow(std::numbers::pi, p.power); },
      },
      f);
}

std::string to_string(const ConstantFactor& f) {
  return std::visit(Overloaded{
                        [](const Zeta3&) { return std::string("zeta(3)"); },
                        [](const LPrimeChi3&) { return std::string("L'(chi_-3,-1)"); },
                        [](const P3At& p) { return "P3(" + p.label + ")"; },
                        [](const DAt& d) { return "D(" + d.label + ")"; },
                        [](const LogOf& l) { return "log(" + l.label + ")"; },
                        [](const PiPow& p) { return "pi^" + std::to_string(p.power); },
                    },
                    f);
}

double ClosedFormTerm::numeric() const {
  double v = to_double(coefficient);
  for (const auto& f : factors) v *= evaluate(f);
  return v;
}

ClosedFormValue::ClosedFormValue(std::vector<ClosedFormTerm> terms) {
  for (auto& t : terms)
    if (t.coefficient != 0) terms_.push_back(std::move(t));
  // Neumaier summation; terms of mixed sign nearly cancel in the trinomial forms.
  double sum = 0.0;
  double comp = 0.0;
  for (const auto& t : terms_) {
    const double x = t.numeric();
    const double s = sum + x;
    comp += std::abs(sum) >= std::abs(x) ? (sum - s) + x : (x - s) + sum;
    sum = s;
  }
  numeric_ = sum + comp;
}

ClosedFormValue ClosedFormValue::scaled(const Rational& c) const {
  std::vector<ClosedFormTerm> out = terms_;
  for (auto& t : out) t.coefficient *= c;
  return ClosedFormValue(std::move(out));
}

std::string ClosedFormValue::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coefficient;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (c < 0) c = -c;
    bool need_star = false;
    if (c != 1 || t.factors.empty()) {
      os << resmahler::to_string(c);
      need_star = true;
    }
    for (const auto& f : t.factors) {
      if (need_star) os << " * ";
      os << resmahler::to_string(f);
      need_star = true;
    }
    first = false;
  }
  return os.str();
}

}  // namespace resmahler
