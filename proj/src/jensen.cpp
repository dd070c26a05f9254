#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <numbers>

#include "resmahler/mahler_numeric.hpp"

namespace resmahler {
namespace {

using Complex = std::complex<double>;

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kClusterTolerance = 1e-8;
constexpr int kMaxAberthIterations = 2000;

struct HornerResult {
  Complex value;
  Complex derivative;
  double magnitude_bound;  // sum |a_k| |z|^k, scale of the rounding error
};

HornerResult horner(std::span<const Complex> a, Complex z) {
  Complex p = a.back();
  Complex dp = 0.0;
  double bound = std::abs(a.back());
  const double az = std::abs(z);
  for (std::size_t k = a.size() - 1; k-- > 0;) {
    dp = dp * z + p;
    p = p * z + a[k];
    bound = bound * az + std::abs(a[k]);
  }
  return {p, dp, bound};
}

// Roots of a polynomial with nonzero constant term and degree >= 1.
std::vector<Complex> aberth(std::span<const Complex> a) {
  const std::size_t n = a.size() - 1;
  if (n == 1) return {-a[0] / a[1]};

  // Starting points on a circle whose radius is the geometric mean of the root moduli.
  const double radius = std::pow(std::abs(a[0]) / std::abs(a[n]), 1.0 / static_cast<double>(n));
  std::vector<Complex> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.4;
    z[k] = std::polar(radius, angle);
  }

  std::vector<bool> done(n, false);
  for (int iter = 0; iter < kMaxAberthIterations; ++iter) {
    bool all_done = true;
    for (std::size_t k = 0; k < n; ++k) {
      if (done[k]) continue;
      const HornerResult h = horner(a, z[k]);
      if (std::abs(h.value) <= 4.0 * kEps * h.magnitude_bound) {
        done[k] = true;
        continue;
      }
      all_done = false;
      if (h.derivative == 0.0) {
        z[k] *= Complex(1.0 + 1e-3, 1e-3);
        continue;
      }
      const Complex ratio = h.value / h.derivative;
      Complex repulsion = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != k && z[k] != z[j]) repulsion += 1.0 / (z[k] - z[j]);
      }
      const Complex step = ratio / (1.0 - ratio * repulsion);
      z[k] -= step;
      if (std::abs(step) <= kEps * std::abs(z[k])) done[k] = true;
    }
    if (all_done) break;
  }

  // Newton polish; keep a step only if it lowers the residual.
  for (auto& root : z) {
    for (int s = 0; s < 3; ++s) {
      const HornerResult h = horner(a, root);
      if (h.derivative == 0.0 || h.value == 0.0) break;
      const Complex candidate = root - h.value / h.derivative;
      if (std::abs(horner(a, candidate).value) >= std::abs(h.value)) break;
      root = candidate;
    }
  }
  return z;
}

// Replace each cluster of nearly equal roots by its centroid.
void merge_clusters(std::vector<Complex>& z) {
  const std::size_t n = z.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(z[i] - z[j]) <= kClusterTolerance * std::max(1.0, std::abs(z[i]))) parent[find(i)] = find(j);

  std::vector<Complex> sum(n, 0.0);
  std::vector<std::size_t> count(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    sum[find(i)] += z[i];
    ++count[find(i)];
  }
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    if (count[r] > 1) z[i] = sum[r] / static_cast<double>(count[r]);
  }
}

}  // namespace

std::string_view to_string(MahlerMethod m) {
  switch (m) {
    case MahlerMethod::kJensen: return "jensen";
    case MahlerMethod::kQmc: return "qmc";
    case MahlerMethod::kMonteCarlo: return "mc";
    case MahlerMethod::kClosedForm: return "closed_form";
  }
  return "closed_form";
}

std::vector<Complex> polynomial_roots(const ComplexPoly& f) {
  if (f.is_zero()) throw DomainError("roots of the zero polynomial");
  const auto coeffs = f.coefficients();
  std::size_t zeros = 0;
  while (coeffs[zeros] == 0.0) ++zeros;
  std::vector<Complex> roots(zeros, 0.0);
  if (coeffs.size() - zeros >= 2) {
    std::vector<Complex> rest = aberth(coeffs.subspan(zeros));
    merge_clusters(rest);
    roots.insert(roots.end(), rest.begin(), rest.end());
  }
  return roots;
}

MahlerEstimate mm_jensen(const ComplexPoly& f) {
  if (f.is_zero()) throw DomainError("Mahler measure of the zero polynomial is undefined");
  double m = std::log(std::abs(f.leading()));
  for (const Complex& r : polynomial_roots(f)) m += std::max(std::log(std::abs(r)), 0.0);
  return MahlerEstimate::exact(m, MahlerMethod::kJensen);
}

MahlerEstimate mm_jensen(const RationalPoly& f) {
  if (f.is_zero()) throw DomainError("Mahler measure of the zero polynomial is undefined");
  double m = std::log(std::abs(static_cast<double>(f.leading())));
  if (f.degree() == 0) return MahlerEstimate::exact(m, MahlerMethod::kJensen);
  auto outside = [](const RationalPoly& g) {
    double s = 0.0;
    for (const Complex& r : polynomial_roots(to_complex(g))) s += std::max(std::log(std::abs(r)), 0.0);
    return s;
  };
  // Yun: f / lead = prod a_i^i with every a_i squarefree and monic.
  const RationalPoly monic = divmod(f, RationalPoly({f.leading()})).first;
  const RationalPoly a0 = gcd(monic, monic.derivative());
  RationalPoly b = divmod(monic, a0).first;
  RationalPoly d = divmod(monic.derivative(), a0).first - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    const RationalPoly a = gcd(b, d);
    if (a.degree() > 0) m += i * outside(a);
    b = divmod(b, a).first;
    d = divmod(d, a).first - b.derivative();
  }
  return MahlerEstimate::exact(m, MahlerMethod::kJensen);
}

}  // namespace resmahler
