#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace resmahler {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntegerMatrix = std::vector<std::vector<Integer>>;

// Fraction-free (Bareiss) elimination; exact for any square integer matrix.
// An empty matrix has determinant 1.
Integer bareiss_determinant(IntegerMatrix m);

bool is_integer(const Rational& r);

std::string to_string(const Rational& r);

// Nearest double; exact for values representable in binary64.
double to_double(const Rational& r);

}  // namespace resmahler
