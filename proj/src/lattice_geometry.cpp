#include "resmahler/lattice_geometry.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "resmahler/errors.hpp"

namespace resmahler {

Support::Support(std::vector<SupportPoint> points) : points_(std::move(points)) {
  if (points_.empty()) throw InputError("support must contain at least one point");
  const std::size_t d = points_.front().size();
  for (const auto& p : points_) {
    if (p.size() != d) throw InputError("support points have different lengths");
  }
  std::sort(points_.begin(), points_.end());
  if (std::adjacent_find(points_.begin(), points_.end()) != points_.end())
    throw InputError("support contains a repeated point");
}

Support Support::translated_to_origin() const {
  const SupportPoint base = points_.front();
  std::vector<SupportPoint> shifted = points_;
  for (auto& p : shifted)
    for (std::size_t i = 0; i < p.size(); ++i) p[i] -= base[i];
  return Support(std::move(shifted));
}

SupportFamily::SupportFamily(std::size_t n, std::vector<Support> supports)
    : n_(n), supports_(std::move(supports)) {
  if (n_ == 0) throw InputError("ambient dimension n must be at least 1");
  if (supports_.size() != n_ + 1)
    throw InputError("a family in Z^" + std::to_string(n_) + " needs " + std::to_string(n_ + 1) +
                     " supports, got " + std::to_string(supports_.size()));
  for (const auto& s : supports_) {
    if (s.ambient_dim() != n_) throw InputError("support point length differs from n");
  }
}

std::size_t SupportFamily::total_size() const {
  std::size_t k = 0;
  for (const auto& s : supports_) k += s.cardinality();
  return k;
}

std::string_view to_string(FamilyClass c) {
  switch (c) {
    case FamilyClass::kDimOne: return "DimOne";
    case FamilyClass::kDimTwo: return "DimTwo";
    case FamilyClass::kDimThreeA: return "DimThreeA";
    case FamilyClass::kDimThreeB: return "DimThreeB";
    case FamilyClass::kDimFourDet: return "DimFourDet";
    case FamilyClass::kGeneralRowReduced: return "GeneralRowReduced";
    case FamilyClass::kOther: return "Other";
  }
  return "Other";
}

void require_two_point_supports(const SupportFamily& family) {
  for (std::size_t i = 0; i < family.supports().size(); ++i) {
    const std::size_t k = family.supports()[i].cardinality();
    if (k < 2) {
      throw DomainError("support A_" + std::to_string(i) + " has k_" + std::to_string(i) + " = " +
                        std::to_string(k) + "; the k_i must be greater than 1 for an essential family");
    }
  }
}

int resultant_polytope_dim(const SupportFamily& family) {
  require_two_point_supports(family);
  return static_cast<int>(family.total_size()) - 2 * static_cast<int>(family.n()) - 1;
}

namespace {

bool is_standard_triangle(const Support& s) {
  static const Support kTriangle({{0, 0}, {1, 0}, {0, 1}});
  return s.translated_to_origin() == kTriangle;
}

}  // namespace

FamilyClass classify_family(const SupportFamily& family) {
  require_two_point_supports(family);
  std::size_t threes = 0;
  std::size_t fours = 0;
  std::size_t larger = 0;
  for (const auto& s : family.supports()) {
    const std::size_t k = s.cardinality();
    if (k == 3) ++threes;
    else if (k == 4) ++fours;
    else if (k > 4) ++larger;
  }
  const std::size_t non_binomial = threes + fours + larger;
  if (non_binomial == 0) return FamilyClass::kDimOne;
  if (family.n() == 2 && threes == 3) {
    const auto& sup = family.supports();
    if (std::all_of(sup.begin(), sup.end(), is_standard_triangle)) return FamilyClass::kDimFourDet;
    return FamilyClass::kOther;
  }
  if (non_binomial == 1) {
    if (threes == 1) return FamilyClass::kDimTwo;
    if (fours == 1) return FamilyClass::kDimThreeA;
    return FamilyClass::kGeneralRowReduced;
  }
  if (non_binomial == 2 && threes == 2) return FamilyClass::kDimThreeB;
  return FamilyClass::kOther;
}

namespace {

// eta_i of every binomial support, validating the diagonal shape.
std::vector<int> binomial_etas(const SupportFamily& family, bool first_axis_reserved) {
  require_two_point_supports(family);
  std::vector<int> etas;
  std::set<std::size_t> axes;
  for (std::size_t i = 0; i < family.supports().size(); ++i) {
    const Support& s = family.supports()[i];
    if (s.cardinality() != 2) continue;
    const auto& pts = s.points();
    const std::string where = "binomial support A_" + std::to_string(i);
    // Sorted order puts the origin first whenever the other point is a positive multiple of e_j.
    if (std::any_of(pts[0].begin(), pts[0].end(), [](int v) { return v != 0; }))
      throw DomainError(where + " does not contain the origin");
    std::size_t axis = pts[1].size();
    for (std::size_t j = 0; j < pts[1].size(); ++j) {
      if (pts[1][j] == 0) continue;
      if (axis != pts[1].size() || pts[1][j] < 0)
        throw DomainError(where + " is not of the form {0, eta*e_j} with eta > 0");
      axis = j;
    }
    if (first_axis_reserved && axis == 0)
      throw DomainError(where + " uses the first axis, which is reserved for the trinomial rows");
    if (!axes.insert(axis).second)
      throw DomainError(where + " repeats axis e_" + std::to_string(axis + 1));
    etas.push_back(pts[1][axis]);
  }
  return etas;
}

}  // namespace

int eta_of_binomial_rows(const SupportFamily& family, bool first_axis_reserved) {
  int eta = 0;
  for (int e : binomial_etas(family, first_axis_reserved)) eta += e;
  return eta;
}

long binomial_root_count(const SupportFamily& family, bool first_axis_reserved) {
  long count = 1;
  for (int e : binomial_etas(family, first_axis_reserved)) count *= e;
  return count;
}

namespace {

int parse_int(std::string_view s, std::size_t line) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\r' || s.back() == '\t')) s.remove_suffix(1);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw InputError("support family line " + std::to_string(line) + ": bad integer '" + std::string(s) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t at = s.find(sep, start);
    parts.push_back(s.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start));
    if (at == std::string_view::npos) return parts;
    start = at + 1;
  }
}

}  // namespace

SupportFamily parse_support_family(std::string_view text) {
  std::vector<Support> supports;
  std::size_t line_no = 0;
  for (std::string_view line : split(text, '\n')) {
    for (std::string_view chunk : split(line, '|')) {
      ++line_no;
      const auto first = chunk.find_first_not_of(" \t\r");
      if (first == std::string_view::npos || chunk[first] == '#') continue;
      std::vector<SupportPoint> points;
      for (std::string_view pt : split(chunk, ';')) {
        SupportPoint coords;
        for (std::string_view c : split(pt, ',')) coords.push_back(parse_int(c, line_no));
        points.push_back(std::move(coords));
      }
      try {
        supports.emplace_back(std::move(points));
      } catch (const InputError& e) {
        throw InputError("support family line " + std::to_string(line_no) + ": " + e.what());
      }
    }
  }
  if (supports.empty()) throw InputError("support family is empty");
  const std::size_t n = supports.front().ambient_dim();
  return SupportFamily(n, std::move(supports));
}

}  // namespace resmahler
