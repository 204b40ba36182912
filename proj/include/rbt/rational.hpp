#ifndef RBT_RATIONAL_HPP
#define RBT_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace rbt {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Parses "p/q", "p", or a decimal literal like "0.02760856" into an exact rational.
/// Throws std::invalid_argument on malformed input.
Rat parse_rational(const std::string& s);

/// Renders as "p/q" (or just "p" when the denominator is 1).
std::string rat_string(const Rat& r);

/// Fixed-point decimal rendering with `places` digits after the point,
/// rounded half away from zero. Display only; never feeds back into math.
std::string rat_decimal(const Rat& r, int places = 10);

/// Both renderings: "p/q (~0.1234567890)". The usual report form.
std::string rat_report(const Rat& r, int places = 10);

Int binomial(unsigned n, unsigned k);
Int falling_factorial(unsigned n, unsigned k);

}  // namespace rbt

#endif
