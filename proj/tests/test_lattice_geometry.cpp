#include <doctest.h>

#include "resmahler/errors.hpp"
#include "resmahler/lattice_geometry.hpp"

using namespace resmahler;

namespace {

Support line_support(std::initializer_list<int> xs) {
  std::vector<SupportPoint> pts;
  for (int x : xs) pts.push_back({x});
  return Support(std::move(pts));
}

}  // namespace

TEST_SUITE("lattice_geometry") {
  TEST_CASE("support canonicalization") {
    const Support a({{1, 0}, {0, 0}, {0, 1}});
    const Support b({{0, 1}, {1, 0}, {0, 0}});
    CHECK(a == b);
    CHECK(a.points().front() == SupportPoint{0, 0});
    CHECK(Support({{2, 3}, {3, 3}, {2, 4}}).translated_to_origin() == a);
    CHECK_THROWS_AS(Support({}), InputError);
    CHECK_THROWS_AS(Support({{0}, {0}}), InputError);
    CHECK_THROWS_AS(Support({{0}, {0, 1}}), InputError);
  }

  TEST_CASE("family shape is checked") {
    CHECK_THROWS_AS(SupportFamily(0, {}), InputError);
    CHECK_THROWS_AS(SupportFamily(1, {line_support({0, 1})}), InputError);
    CHECK_THROWS_AS(SupportFamily(2, {Support({{0}, {1}}), Support({{0}, {1}}), Support({{0}, {1}})}), InputError);
  }

  TEST_CASE("polytope dimension examples") {
    CHECK(resultant_polytope_dim(SupportFamily(1, {line_support({0, 1}), line_support({0, 1})})) == 1);
    const Support tri({{0, 0}, {1, 0}, {0, 1}});
    CHECK(resultant_polytope_dim(SupportFamily(2, {tri, tri, tri})) == 4);
    CHECK(resultant_polytope_dim(SupportFamily(1, {line_support({0, 1}), line_support({0, 1, 2, 3, 4, 5})})) == 5);
  }

  TEST_CASE("one-point support is a domain error naming the index") {
    const SupportFamily f(1, {line_support({0, 1}), line_support({4})});
    CHECK_THROWS_WITH_AS(require_two_point_supports(f), doctest::Contains("A_1"), DomainError);
    CHECK_THROWS_AS((void)resultant_polytope_dim(f), DomainError);
    CHECK_THROWS_AS((void)classify_family(f), DomainError);
  }

  TEST_CASE("classification examples") {
    CHECK(classify_family(SupportFamily(1, {line_support({0, 1}), line_support({0, 3})})) == FamilyClass::kDimOne);
    const Support b1({{0, 0, 0}, {1, 0, 0}});
    const Support b2({{0, 0, 0}, {0, 1, 0}});
    const Support b3({{0, 0, 0}, {0, 0, 1}});
    const Support t({{0, 0, 0}, {1, 0, 0}, {0, 1, 1}});
    CHECK(classify_family(SupportFamily(3, {t, b1, b2, b3})) == FamilyClass::kDimTwo);
    const Support tri({{0, 0}, {1, 0}, {0, 1}});
    CHECK(classify_family(SupportFamily(2, {tri, tri, tri})) == FamilyClass::kDimFourDet);
    const Support shifted({{5, 5}, {6, 5}, {5, 6}});
    CHECK(classify_family(SupportFamily(2, {tri, shifted, tri})) == FamilyClass::kDimFourDet);
    const Support other({{0, 0}, {2, 0}, {0, 1}});
    CHECK(classify_family(SupportFamily(2, {tri, other, tri})) == FamilyClass::kOther);
    CHECK(classify_family(SupportFamily(1, {line_support({0, 1, 2, 3}), line_support({0, 1})})) ==
          FamilyClass::kDimThreeA);
    CHECK(classify_family(SupportFamily(1, {line_support({0, 1, 2}), line_support({0, 1, 2})})) ==
          FamilyClass::kDimThreeB);
    CHECK(classify_family(SupportFamily(1, {line_support({0, 1, 2, 3, 4}), line_support({0, 1})})) ==
          FamilyClass::kGeneralRowReduced);
    CHECK(classify_family(SupportFamily(1, {line_support({0, 1, 2, 3}), line_support({0, 1, 2})})) ==
          FamilyClass::kOther);
  }

  TEST_CASE("classification matches the dimension on a grid") {
    // n = 1, 2 with cardinalities 2..5; supports are initial segments of a line.
    for (std::size_t n = 1; n <= 2; ++n) {
      const int combos = n == 1 ? 16 : 64;
      for (int code = 0; code < combos; ++code) {
        std::vector<Support> supports;
        int c = code;
        for (std::size_t i = 0; i <= n; ++i) {
          const int k = 2 + c % 4;
          c /= 4;
          std::vector<SupportPoint> pts;
          for (int j = 0; j < k; ++j) {
            SupportPoint p(n, 0);
            p[0] = j;
            if (n == 2 && j == k - 1 && k > 2) p[1] = 1;
            pts.push_back(p);
          }
          supports.emplace_back(std::move(pts));
        }
        const SupportFamily f(n, supports);
        const int dim = resultant_polytope_dim(f);
        const FamilyClass cls = classify_family(f);
        CHECK((cls == FamilyClass::kDimOne) == (dim == 1));
        CHECK((cls == FamilyClass::kDimTwo) == (dim == 2));
        CHECK((cls == FamilyClass::kDimThreeA || cls == FamilyClass::kDimThreeB) == (dim == 3));
      }
    }
  }

  TEST_CASE("eta of binomial rows") {
    const Support tri({{0, 0}, {1, 0}, {0, 1}});
    const SupportFamily f(2, {tri, Support({{0, 0}, {2, 0}}), Support({{0, 0}, {0, 3}})});
    CHECK(eta_of_binomial_rows(f, false) == 5);
    CHECK(binomial_root_count(f, false) == 6);
    // The first axis is taken by A_1 here.
    CHECK_THROWS_AS((void)eta_of_binomial_rows(f, true), DomainError);

    CHECK(eta_of_binomial_rows(SupportFamily(1, {line_support({0, 1, 2}), line_support({0, 1})}), false) == 1);
    CHECK_THROWS_AS((void)eta_of_binomial_rows(SupportFamily(1, {line_support({0, 1, 2}), line_support({1, 3})}), false),
                    DomainError);
    // Two binomials on the same axis.
    const SupportFamily same_axis(2, {tri, Support({{0, 0}, {1, 0}}), Support({{0, 0}, {2, 0}})});
    CHECK_THROWS_AS((void)eta_of_binomial_rows(same_axis, false), DomainError);
    // Not a multiple of a unit vector.
    const SupportFamily diagonal(2, {tri, Support({{0, 0}, {1, 1}}), Support({{0, 0}, {0, 1}})});
    CHECK_THROWS_AS((void)eta_of_binomial_rows(diagonal, false), DomainError);
    // No binomial rows: empty sum and empty product.
    const SupportFamily none(1, {line_support({0, 1, 2}), line_support({0, 1, 2})});
    CHECK(eta_of_binomial_rows(none, true) == 0);
    CHECK(binomial_root_count(none, true) == 1);
  }

  TEST_CASE("family text format") {
    const SupportFamily f = parse_support_family("# triangle\n0,0;1,0;0,1\n\n0,0; 1,0 ;0,1\n0,0;1,0;0,1\n");
    CHECK(f.n() == 2);
    CHECK(f.total_size() == 9);
    CHECK(classify_family(f) == FamilyClass::kDimFourDet);
    const SupportFamily g = parse_support_family("0;1|0;2");
    CHECK(g.n() == 1);
    CHECK(g.supports()[1] == line_support({0, 2}));
    CHECK_THROWS_AS(parse_support_family(""), InputError);
    CHECK_THROWS_AS(parse_support_family("0;x|0;1"), InputError);
    CHECK_THROWS_AS(parse_support_family("0;1|0;1|0;1"), InputError);
    CHECK_THROWS_AS(parse_support_family("0;1|0;0"), InputError);
    CHECK(to_string(FamilyClass::kGeneralRowReduced) == "GeneralRowReduced");
  }
}
