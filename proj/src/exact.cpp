#include "resmahler/exact.hpp"

#include <utility>

#include "resmahler/errors.hpp"

namespace resmahler {

Integer bareiss_determinant(IntegerMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw InputError("bareiss_determinant: matrix is not square");
  }
  if (n == 0) return Integer(1);

  int sign = 1;
  Integer prev_pivot = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return Integer(0);
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Division is exact by Sylvester's identity.
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev_pivot;
      }
      m[i][k] = 0;
    }
    prev_pivot = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : Integer(-m[n - 1][n - 1]);
}

bool is_integer(const Rational& r) { return denominator(r) == 1; }

std::string to_string(const Rational& r) { return r.str(); }

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace resmahler
