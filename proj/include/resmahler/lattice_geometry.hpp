#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace resmahler {

/// Lattice exponent vector a_ij of one monomial.
using SupportPoint = std::vector<int>;

/// A finite set of lattice points A_i, stored sorted lexicographically so
/// two supports with the same points compare equal.
///
/// Construction only requires the points to be distinct and of a common
/// length. The essential-family condition k_i >= 2 is checked by the family
/// operations, which can then report the offending support index.
class Support {
 public:
  explicit Support(std::vector<SupportPoint> points);

  const std::vector<SupportPoint>& points() const { return points_; }
  std::size_t cardinality() const { return points_.size(); }
  std::size_t ambient_dim() const { return points_.front().size(); }

  /// Copy shifted so that its lexicographically smallest point is the origin.
  Support translated_to_origin() const;

  friend bool operator==(const Support&, const Support&) = default;

 private:
  std::vector<SupportPoint> points_;
};

/// n+1 supports in Z^n. Essentialness is not verified; callers assert it.
class SupportFamily {
 public:
  SupportFamily(std::size_t n, std::vector<Support> supports);

  std::size_t n() const { return n_; }
  const std::vector<Support>& supports() const { return supports_; }
  /// k = sum of the cardinalities k_i.
  std::size_t total_size() const;

 private:
  std::size_t n_;
  std::vector<Support> supports_;
};

enum class FamilyClass {
  kDimOne,             // every k_i = 2
  kDimTwo,             // one k_i = 3, the rest 2
  kDimThreeA,          // one k_i = 4, the rest 2
  kDimThreeB,          // two k_i = 3, the rest 2
  kDimFourDet,         // n = 2, three copies of the standard triangle
  kGeneralRowReduced,  // one k_i = l >= 5, the rest 2
  kOther,
};

std::string_view to_string(FamilyClass c);

/// Throws DomainError naming the first support with fewer than two points.
void require_two_point_supports(const SupportFamily& family);

/// Dimension of the Newton polytope of the sparse resultant, k - 2n - 1.
int resultant_polytope_dim(const SupportFamily& family);

FamilyClass classify_family(const SupportFamily& family);

/// Sum of eta_i over the binomial supports, each of which must be exactly
/// {0, eta_i * e_j} with eta_i > 0 and pairwise distinct axes j. With
/// `first_axis_reserved` the axes must also avoid the first coordinate
/// (the layout where two trinomial supports share the first variable).
///
/// The multiplier of the Mahler measure in the low-dimensional closed forms
/// is the number of common roots of the binomial rows, which is the product
/// of the eta_i; see binomial_root_count. The two agree when there is a
/// single binomial row.
int eta_of_binomial_rows(const SupportFamily& family, bool first_axis_reserved);

/// Product of eta_i over the binomial supports (1 if there are none); same
/// shape requirements as eta_of_binomial_rows.
long binomial_root_count(const SupportFamily& family, bool first_axis_reserved);

/// Parses the one-support-per-line text format, e.g.
///
///   0,0;1,0;0,1
///   0,0;1,0;0,1
///   0,0;1,0;0,1
///
/// Blank lines and lines starting with '#' are ignored; a '|' also separates
/// supports so a family fits on one command line. Throws InputError.
SupportFamily parse_support_family(std::string_view text);

}  // namespace resmahler
