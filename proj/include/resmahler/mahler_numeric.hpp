#pragma once

#include <complex>
#include <cstdint>
#include <string_view>
#include <vector>

#include "resmahler/exact.hpp"
#include "resmahler/laurent.hpp"
#include "resmahler/univariate.hpp"

namespace resmahler {

enum class MahlerMethod {
  kJensen,      // exact root-based evaluation of a univariate polynomial
  kQmc,         // randomized quasi-Monte Carlo over the torus
  kMonteCarlo,  // plain Monte Carlo fallback
  kClosedForm,
};

std::string_view to_string(MahlerMethod m);

/// Logarithmic Mahler measure in nats. std_error is zero exactly for the
/// deterministic methods; `samples` counts integrand evaluations and
/// `resampled` the points nudged off the zero set of the polynomial.
struct MahlerEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  MahlerMethod method = MahlerMethod::kClosedForm;
  std::uint64_t resampled = 0;

  static MahlerEstimate exact(double value, MahlerMethod method) { return {value, 0.0, 0, method, 0}; }
  bool is_statistical() const { return method == MahlerMethod::kQmc || method == MahlerMethod::kMonteCarlo; }
};

// ---------------------------------------------------------------------------
// Jensen evaluation

/// All complex roots of f (zero roots included), by Aberth-Ehrlich
/// iteration with a Newton polish. Roots closer than 1e-8 (relative) are
/// treated as one cluster and replaced by the cluster centroid, which is far
/// more accurate than the individual members for a multiple root.
std::vector<std::complex<double>> polynomial_roots(const ComplexPoly& f);

/// m(f) = log|lead f| + sum over roots of max(log|alpha|, 0).
/// Throws DomainError for the zero polynomial.
MahlerEstimate mm_jensen(const ComplexPoly& f);

/// Exact input: split into squarefree factors first, so repeated roots cost
/// no accuracy.
MahlerEstimate mm_jensen(const RationalPoly& f);

// ---------------------------------------------------------------------------
// Torus integration

enum class SamplingMethod { kQmc, kMonteCarlo };

struct QmcOptions {
  std::uint64_t samples = std::uint64_t{1} << 20;  // total over all shifts
  std::uint64_t seed = 0;
  unsigned shifts = 16;
  SamplingMethod method = SamplingMethod::kQmc;
  unsigned threads = 0;  // 0: RESMAHLER_THREADS, else hardware concurrency
};

/// Worker count for `requested` (see QmcOptions::threads).
unsigned resolve_thread_count(unsigned requested);

/// Estimates m(P) = integral over [0,1)^d of log|P(e^{2 pi i u})|.
///
/// The point set is the first samples/shifts points of a Sobol' sequence,
/// replicated under `shifts` independent random digital shifts; the value
/// is the mean of the replicate means and std_error their standard error.
/// A floor proportional to the integrand scale is folded into std_error to
/// account for floating-point evaluation error, so it is never exactly 0.
/// Points where |P| < 1e-300 are moved by one ulp and re-evaluated.
///
/// Work is split into fixed blocks evaluated concurrently and merged in
/// block order, so the result does not depend on the thread count.
///
/// Throws DomainError for the zero polynomial and InputError for
/// samples < 1024, shifts < 2 or more than 64 variables.
MahlerEstimate mm_qmc(const ComplexLaurent& p, const QmcOptions& options);
MahlerEstimate mm_qmc(const ComplexLaurent& p, std::uint64_t samples, std::uint64_t seed);
MahlerEstimate mm_qmc(const RationalLaurent& p, const QmcOptions& options);

// ---------------------------------------------------------------------------
// Monomial change of variables

/// Square integer matrix with |det| = 1, checked exactly on construction.
class UnimodularMatrix {
 public:
  explicit UnimodularMatrix(std::vector<std::vector<int>> entries);
  static UnimodularMatrix identity(std::size_t dim);

  std::size_t dim() const { return entries_.size(); }
  int operator()(std::size_t row, std::size_t col) const { return entries_[row][col]; }
  const std::vector<std::vector<int>>& entries() const { return entries_; }

 private:
  std::vector<std::vector<int>> entries_;
};

/// P(y^V): variable i becomes prod_j y_j^{V[i][j]}, so exponent e maps to
/// V^T e. Mahler measure is unchanged. Throws InputError on dimension mismatch.
template <class Coeff>
LaurentPolynomial<Coeff> apply_unimodular(const LaurentPolynomial<Coeff>& p, const UnimodularMatrix& v) {
  const std::size_t d = p.num_vars();
  if (v.dim() != d) throw InputError("apply_unimodular: matrix dimension differs from variable count");
  LaurentPolynomial<Coeff> out(d);
  Exponent image(d);
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t j = 0; j < d; ++j) {
      long acc = 0;
      for (std::size_t i = 0; i < d; ++i) acc += static_cast<long>(e[i]) * v(i, j);
      image[j] = static_cast<int>(acc);
    }
    out.add_term(image, c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Linear forms in two variables

/// m(a + b x + c y) in closed form. When |a|, |b|, |c| are the sides of a
/// non-degenerate triangle with opposite angles alpha, beta, gamma:
///   (D(|a/b| e^{i gamma}) + alpha log|a| + beta log|b| + gamma log|c|) / pi,
/// otherwise log max(|a|, |b|, |c|). Throws DomainError on a zero argument.
MahlerEstimate mm_cassaigne_maillot(std::complex<double> a, std::complex<double> b, std::complex<double> c);

}  // namespace resmahler
