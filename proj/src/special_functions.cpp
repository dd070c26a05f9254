#include "resmahler/special_functions.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "resmahler/errors.hpp"

namespace resmahler::special {
namespace {

using std::numbers::pi;

constexpr double kZeta2 = pi * pi / 6.0;
constexpr double kSeriesStop = 1e-17;
constexpr double kSingularRadius = 1e-14;
constexpr int kBernoulliTerms = 60;

// Neumaier-compensated accumulator.
template <class T>
class CompensatedSum {
 public:
  void add(T x) {
    const T t = sum_ + x;
    comp_ += std::abs(sum_) >= std::abs(x) ? (sum_ - t) + x : (x - t) + sum_;
    sum_ = t;
  }
  T value() const { return sum_ + comp_; }

 private:
  T sum_{};
  T comp_{};
};

// b[m] = B_{2m} / (2m)! = (-1)^{m+1} 2 zeta(2m) / (2 pi)^{2m}, m >= 1.
const std::array<double, kBernoulliTerms + 1>& bernoulli_over_factorial() {
  static const auto table = [] {
    std::array<double, kBernoulliTerms + 1> b{};
    const double two_pi_sq = 4.0 * pi * pi;
    double scale = 1.0;
    for (int m = 1; m <= kBernoulliTerms; ++m) {
      scale /= two_pi_sq;
      double zeta_2m;
      if (m == 1) {
        zeta_2m = kZeta2;
      } else if (m == 2) {
        zeta_2m = std::pow(pi, 4) / 90.0;
      } else if (m == 3) {
        zeta_2m = std::pow(pi, 6) / 945.0;
      } else if (m == 4) {
        zeta_2m = std::pow(pi, 8) / 9450.0;
      } else {
        zeta_2m = 0.0;
        for (int k = 60; k >= 1; --k) zeta_2m += std::pow(static_cast<double>(k), -2.0 * m);
      }
      b[static_cast<std::size_t>(m)] = (m % 2 == 1 ? 2.0 : -2.0) * zeta_2m * scale;
    }
    return b;
  }();
  return table;
}

// sum_{k>=1} z^k / k^q for |z| <= 1/2.
Complex power_series(int q, Complex z) {
  CompensatedSum<Complex> sum;
  Complex zk = z;
  for (int k = 1; k < 2000; ++k) {
    const Complex term = zk / std::pow(static_cast<double>(k), q);
    sum.add(term);
    if (std::abs(term) < kSeriesStop * (std::abs(sum.value()) + 1.0)) break;
    zk *= z;
  }
  return sum.value();
}

// Expansion in u = log z around z = 1, convergent for |u| < 2 pi.
Complex log_series(int q, Complex z) {
  const Complex u = std::log(z);
  const Complex log_neg_u = std::log(-u);
  const auto& b = bernoulli_over_factorial();
  const Complex u2 = u * u;
  CompensatedSum<Complex> sum;
  Complex upow;
  if (q == 2) {
    sum.add(kZeta2);
    sum.add(u * (1.0 - log_neg_u));
    sum.add(-u2 / 4.0);
    upow = u * u2;  // u^{2m+1}
  } else {
    sum.add(dirichlet_constants().zeta3);
    sum.add(kZeta2 * u);
    sum.add(0.5 * u2 * (1.5 - log_neg_u));
    sum.add(-u * u2 / 12.0);
    upow = u2 * u2;  // u^{2m+2}
  }
  for (int m = 1; m <= kBernoulliTerms; ++m) {
    const double mm = 2.0 * m;
    const double denom = q == 2 ? mm * (mm + 1.0) : mm * (mm + 1.0) * (mm + 2.0);
    const Complex term = -b[static_cast<std::size_t>(m)] * upow / denom;
    sum.add(term);
    if (std::abs(term) < kSeriesStop * (std::abs(sum.value()) + 1.0)) break;
    upow *= u2;
  }
  return sum.value();
}

// Li_q for |z| <= 1, z != 1.
Complex li_in_disk(int q, Complex z) {
  if (q == 1) return std::abs(z) <= 0.5 ? power_series(1, z) : -std::log(1.0 - z);
  if (std::abs(z) <= 0.5) return power_series(q, z);
  return log_series(q, z);
}

void require_finite(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw DomainError("polylogarithm argument is not finite");
}

}  // namespace

Complex li(int q, Complex z) {
  if (q < 1 || q > 3) throw InputError("li: order must be 1, 2 or 3");
  require_finite(z);
  if (q == 1) {
    if (z == Complex(1.0, 0.0)) throw DomainError("li(1, z): singular at z = 1");
    return li_in_disk(1, z);
  }
  if (z.imag() == 0.0 && z.real() > 1.0)
    throw DomainError("li(" + std::to_string(q) + ", z): z lies on the branch cut (1, inf)");
  if (std::abs(z - 1.0) < kSingularRadius)
    return q == 2 ? Complex(kZeta2) : Complex(dirichlet_constants().zeta3);
  if (std::abs(z) <= 1.0) return li_in_disk(q, z);

  // Inversion relations, valid off the cut.
  const Complex inv = li_in_disk(q, 1.0 / z);
  const Complex l = std::log(-z);
  if (q == 2) return -inv - kZeta2 - 0.5 * l * l;
  return inv - kZeta2 * l - l * l * l / 6.0;
}

double bloch_wigner(Complex z) {
  require_finite(z);
  if (std::abs(z) < kSingularRadius || std::abs(z - 1.0) < kSingularRadius) return 0.0;
  if (std::abs(z) > 1.0) return -bloch_wigner(1.0 / z);
  return li_in_disk(2, z).imag() + std::log(std::abs(z)) * std::arg(1.0 - z);
}

double zagier_p3(Complex z) {
  require_finite(z);
  if (std::abs(z) < kSingularRadius) return 0.0;
  if (std::abs(z - 1.0) < kSingularRadius) return dirichlet_constants().zeta3;
  if (std::abs(z) > 1.0) return zagier_p3(1.0 / z);
  const double l = std::log(std::abs(z));
  const Complex v = li_in_disk(3, z) - l * li_in_disk(2, z) + (l * l / 3.0) * li_in_disk(1, z);
  return v.real();
}

int chi_minus3(long h) {
  switch (((h % 3) + 3) % 3) {
    case 1: return 1;
    case 2: return -1;
    default: return 0;
  }
}

namespace {

// sum_{h>=1} h^{-3}: 63 explicit terms plus the Euler-Maclaurin tail from 64.
double zeta3_series() {
  constexpr int kN = 64;
  CompensatedSum<double> sum;
  for (int h = kN - 1; h >= 1; --h) sum.add(1.0 / (static_cast<double>(h) * h * h));
  const double n = kN;
  sum.add(1.0 / (2 * n * n) + 1.0 / (2 * n * n * n) + 1.0 / (4 * std::pow(n, 4)) -
          1.0 / (12 * std::pow(n, 6)) + 1.0 / (12 * std::pow(n, 8)));
  return sum.value();
}

// sum_{j>=N} (j + c)^{-2} by Euler-Maclaurin.
double inverse_square_tail(double n, double c) {
  const double x = n + c;
  return 1.0 / x + 1.0 / (2 * x * x) + 1.0 / (6 * std::pow(x, 3)) - 1.0 / (30 * std::pow(x, 5)) +
         1.0 / (42 * std::pow(x, 7));
}

// Character series grouped as (1/(3j+1)^2 - 1/(3j+2)^2), plus tails of the
// two Hurwitz-type halves.
double l_chi3_2_series() {
  constexpr int kN = 64;
  CompensatedSum<double> sum;
  for (int j = kN - 1; j >= 0; --j) {
    const double a = 3.0 * j + 1.0;
    const double b = 3.0 * j + 2.0;
    sum.add(1.0 / (a * a) - 1.0 / (b * b));
  }
  sum.add((inverse_square_tail(kN, 1.0 / 3.0) - inverse_square_tail(kN, 2.0 / 3.0)) / 9.0);
  return sum.value();
}

}  // namespace

const ConstantsTable& dirichlet_constants() {
  static const ConstantsTable table = [] {
    ConstantsTable t{};
    t.zeta3 = zeta3_series();
    t.l_chi3_2 = l_chi3_2_series();
    t.lprime_chi3_m1 = 3.0 * std::sqrt(3.0) / (4.0 * pi) * t.l_chi3_2;
    return t;
  }();
  return table;
}

}  // namespace resmahler::special
