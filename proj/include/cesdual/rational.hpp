// Exact scalar kind used by the matrix sections and the membership queries.

#ifndef CESDUAL_RATIONAL_HPP
#define CESDUAL_RATIONAL_HPP

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cesdual {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Accepts "p", "-p/q", "p/q" with arbitrary-precision integers; throws
// std::invalid_argument on malformed input or q = 0.
Rational parse_rational(const std::string& text);

std::string rational_to_string(const Rational& r); // "p/q" or "p"

double rational_to_double(const Rational& r);

} // namespace cesdual

#endif
