#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace ck {

// All arithmetic in this library is exact. Dimensions of cohomology spaces
// are integers decided by ranks of linear systems; floating point would make
// those ranks ill-defined, so it is banned throughout.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p/q" with the fraction reduced, or just "p" for whole values.
std::string to_string(const Rational& r);

// Accepts "p" or "p/q" with an optional sign on the numerator; rejects a
// zero denominator and anything else. No whitespace handling here.
std::optional<Rational> parse_rational(const std::string& text);

// -1, 0 or +1.
int sign(const Rational& r);

} // namespace ck
