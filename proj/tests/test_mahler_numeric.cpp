#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "resmahler/errors.hpp"
#include "resmahler/mahler_numeric.hpp"
#include "resmahler/special_functions.hpp"
#include "support.hpp"

using namespace resmahler;
using resmahler::test::laurent;
using resmahler::test::poly;

namespace {

constexpr double kLPrime = 0.32306594721945051409;
constexpr double kSmyth3 = 0.42627839881750579092;  // 7 zeta(3) / (2 pi^2)

double jensen(const RationalPoly& f) { return mm_jensen(f).value; }

bool within(const MahlerEstimate& e, double expected, double sigmas = 3.0) {
  return std::abs(e.value - expected) <= sigmas * e.std_error;
}

UnimodularMatrix random_unimodular(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> small(-2, 2);
  std::vector<std::vector<int>> m{{1, 0}, {0, 1}};
  for (int step = 0; step < 4; ++step) {
    const int k = small(rng);
    const std::size_t i = step % 2;
    for (std::size_t c = 0; c < 2; ++c) m[i][c] += k * m[1 - i][c];
  }
  if (rng() & 1U) std::swap(m[0], m[1]);
  return UnimodularMatrix(m);
}

}  // namespace

TEST_SUITE("mahler_numeric") {
  TEST_CASE("Jensen examples") {
    CHECK(jensen(poly({2, 2})) == doctest::Approx(std::numbers::ln2).epsilon(1e-14));
    CHECK(jensen(poly({-1, -1, 1})) == doctest::Approx(0.48121182505960344750).epsilon(1e-13));
    CHECK(std::abs(jensen(poly({-1, 0, 0, 0, 0, 1}))) < 1e-12);
    // Lehmer's polynomial: log of Lehmer's number.
    CHECK(jensen(poly({1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1})) ==
          doctest::Approx(0.16235761199927038).epsilon(1e-11));
    CHECK(jensen(poly({5})) == doctest::Approx(std::log(5.0)));
    CHECK_THROWS_AS(mm_jensen(ComplexPoly()), DomainError);
    CHECK_THROWS_AS(mm_jensen(RationalPoly()), DomainError);
    const RationalPoly lehmer = poly({1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1});
    CHECK(mm_jensen(to_complex(lehmer)).value == doctest::Approx(jensen(lehmer)).epsilon(1e-13));
  }

  TEST_CASE("Jensen with multiple and zero roots") {
    // (t+1)^2, (t-1)^3, t^3 (t-2)^2 (t+3)
    CHECK(std::abs(jensen(poly({1, 2, 1}))) < 1e-12);
    CHECK(std::abs(jensen(poly({-1, 3, -3, 1}))) < 1e-12);
    const RationalPoly f = poly({0, 0, 0, 1}) * poly({4, -4, 1}) * poly({3, 1});
    CHECK(jensen(f) == doctest::Approx(std::log(12.0)).epsilon(1e-11));
    const auto roots = polynomial_roots(to_complex(f));
    CHECK(roots.size() == 6);
    CHECK(std::count(roots.begin(), roots.end(), std::complex<double>(0.0)) == 3);
  }

  TEST_CASE("Jensen scaling and homogeneity") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> coeff(-9, 9);
    for (int i = 0; i < 20; ++i) {
      std::vector<Rational> c(6);
      for (auto& x : c) x = coeff(rng);
      c.back() = coeff(rng) == 0 ? 1 : 3;
      const RationalPoly f(c);
      if (f.degree() < 1) continue;
      CHECK(jensen(Rational(-7) * f) == doctest::Approx(std::log(7.0) + jensen(f)).epsilon(1e-10));
      CHECK(jensen(poly({0, 0, 1}) * f) == doctest::Approx(jensen(f)).epsilon(1e-10));
    }
  }

  TEST_CASE("QMC examples") {
    const MahlerEstimate c = mm_qmc(to_complex(laurent("-3")), 1 << 12, 0);
    CHECK(c.value == doctest::Approx(std::log(3.0)));
    CHECK(c.std_error < 1e-10);
    CHECK(c.samples > 0);

    const MahlerEstimate two = mm_qmc(to_complex(laurent("1 + x + y")), 1 << 20, 0);
    CHECK(two.method == MahlerMethod::kQmc);
    CHECK(two.samples == (1U << 20));
    CHECK(two.std_error > 0.0);
    CHECK(within(two, kLPrime));

    const MahlerEstimate three = mm_qmc(to_complex(laurent("1 + x + y + z")), 1 << 20, 0);
    CHECK(within(three, kSmyth3));
  }

  TEST_CASE("QMC input validation") {
    const ComplexLaurent p = to_complex(laurent("1 + x"));
    CHECK_THROWS_AS(mm_qmc(p, 512, 0), InputError);
    QmcOptions o;
    o.shifts = 1;
    CHECK_THROWS_AS(mm_qmc(p, o), InputError);
    CHECK_THROWS_AS(mm_qmc(ComplexLaurent(2), o), DomainError);
  }

  TEST_CASE("QMC is deterministic and independent of the thread count") {
    const ComplexLaurent p = to_complex(laurent("1 + x + y - 2*x*y*z"));
    QmcOptions o;
    o.samples = 1 << 16;
    o.seed = 11;
    o.threads = 1;
    const MahlerEstimate a = mm_qmc(p, o);
    o.threads = 3;
    const MahlerEstimate b = mm_qmc(p, o);
    CHECK(a.value == b.value);
    CHECK(a.std_error == b.std_error);
    o.seed = 12;
    CHECK(mm_qmc(p, o).value != a.value);
  }

  TEST_CASE("Monte Carlo fallback") {
    QmcOptions o;
    o.method = SamplingMethod::kMonteCarlo;
    o.samples = 1 << 18;
    const MahlerEstimate m = mm_qmc(to_complex(laurent("1 + x + y")), o);
    CHECK(m.method == MahlerMethod::kMonteCarlo);
    CHECK(within(m, kLPrime, 4.0));
  }

  TEST_CASE("points on the zero set are nudged and counted") {
    ComplexLaurent tiny(1);
    tiny.add_term({0}, 1e-305);
    tiny.add_term({1}, 1e-305);
    const MahlerEstimate m = mm_qmc(tiny, 1 << 10, 0);
    CHECK(m.resampled > 0);
    CHECK(std::isfinite(m.value));
  }

  TEST_CASE("unimodular matrices") {
    CHECK_NOTHROW(UnimodularMatrix({{2, 1}, {1, 1}}));
    CHECK_NOTHROW(UnimodularMatrix({{0, 1}, {1, 0}}));
    CHECK_THROWS_AS(UnimodularMatrix({{2, 0}, {0, 1}}), InputError);
    CHECK_THROWS_AS(UnimodularMatrix({{1, 0}}), InputError);
    CHECK_THROWS_AS(UnimodularMatrix({}), InputError);
    CHECK(UnimodularMatrix::identity(3)(2, 2) == 1);
  }

  TEST_CASE("unimodular substitution") {
    const RationalLaurent p = laurent("1 + x + y");
    CHECK(apply_unimodular(p, UnimodularMatrix::identity(2)) == p);
    RationalLaurent q(2);
    q.add_term({0, 0}, 1);
    q.add_term({1, 0}, 1);
    const UnimodularMatrix v({{1, 1}, {0, 1}});
    CHECK(apply_unimodular(q, v) == laurent("1 + x*y"));
    CHECK_THROWS_AS(apply_unimodular(p, UnimodularMatrix::identity(3)), InputError);
  }

  TEST_CASE("unimodular invariance of the measure") {
    std::mt19937_64 rng(3);
    const RationalLaurent p = laurent("1 + x + y");
    const MahlerEstimate base = mm_qmc(p, QmcOptions{});
    for (int i = 0; i < 10; ++i) {
      const UnimodularMatrix v = random_unimodular(rng);
      const MahlerEstimate moved = mm_qmc(apply_unimodular(p, v), QmcOptions{});
      CHECK(std::abs(moved.value - base.value) <= 3.0 * std::hypot(moved.std_error, base.std_error));
    }
  }

  TEST_CASE("Cassaigne-Maillot against frozen quadrature values") {
    auto cm = [](double a, double b, double c) { return mm_cassaigne_maillot(a, b, c).value; };
    CHECK(cm(1, 1, 1) == doctest::Approx(kLPrime).epsilon(1e-13));
    CHECK(cm(3, 1, 1) == doctest::Approx(std::log(3.0)));
    CHECK(cm(2, 1, 1) == doctest::Approx(std::log(2.0)));
    CHECK(cm(2, 3, 4) == doctest::Approx(1.44956474425562844800).epsilon(1e-12));
    CHECK(cm(3, 4, 5) == doctest::Approx(1.72404762591171898210).epsilon(1e-12));
    CHECK(cm(1, 2, 2) == doctest::Approx(0.85286432679432554953).epsilon(1e-12));
    CHECK(cm(5, 6, 7) == doctest::Approx(2.12107936672217644923).epsilon(1e-12));
    CHECK(cm(2, 2, 3) == doctest::Approx(1.18859073344099289653).epsilon(1e-12));
    // Only the moduli matter.
    CHECK(mm_cassaigne_maillot({0.0, 2.0}, -3.0, {0.0, -4.0}).value == doctest::Approx(cm(2, 3, 4)));
    CHECK(mm_cassaigne_maillot(1.0, 1.0, 1.0).method == MahlerMethod::kClosedForm);
  }

  TEST_CASE("Cassaigne-Maillot rejects zero coefficients") {
    CHECK_THROWS_AS(mm_cassaigne_maillot(0.0, 1.0, 1.0), DomainError);
  }

  TEST_CASE("Cassaigne-Maillot against QMC") {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<int> side(1, 9);
    for (int i = 0; i < 10; ++i) {
      const int a = side(rng), b = side(rng), c = side(rng);
      // Degenerate triangles give a tangential zero on the torus; the
      // integrand is then too heavy-tailed for a 3 sigma check.
      if (2 * std::max({a, b, c}) == a + b + c) {
        CHECK(mm_cassaigne_maillot(a, b, c).value == doctest::Approx(std::log(std::max({a, b, c}))).epsilon(1e-14));
        continue;
      }
      CAPTURE(a);
      CAPTURE(b);
      CAPTURE(c);
      RationalLaurent p(2);
      p.add_term({0, 0}, a);
      p.add_term({1, 0}, b);
      p.add_term({0, 1}, c);
      CHECK(within(mm_qmc(p, QmcOptions{}), mm_cassaigne_maillot(a, b, c).value));
    }
  }
}
