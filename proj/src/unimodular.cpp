#include "resmahler/errors.hpp"
#include "resmahler/mahler_numeric.hpp"

namespace resmahler {

UnimodularMatrix::UnimodularMatrix(std::vector<std::vector<int>> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw InputError("unimodular matrix must be nonempty");
  IntegerMatrix m;
  m.reserve(entries_.size());
  for (const auto& row : entries_) {
    if (row.size() != entries_.size()) throw InputError("unimodular matrix must be square");
    m.emplace_back(row.begin(), row.end());
  }
  const Integer det = bareiss_determinant(std::move(m));
  if (det != 1 && det != -1) throw InputError("matrix is not unimodular (|det| != 1)");
}

UnimodularMatrix UnimodularMatrix::identity(std::size_t dim) {
  std::vector<std::vector<int>> e(dim, std::vector<int>(dim, 0));
  for (std::size_t i = 0; i < dim; ++i) e[i][i] = 1;
  return UnimodularMatrix(std::move(e));
}

}  // namespace resmahler
