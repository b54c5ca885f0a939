#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace wallcross {

// All arithmetic in this library is exact. Rational is the only scalar type;
// nothing here touches floating point.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int numer(const Rational& x) { return boost::multiprecision::numerator(x); }
inline Int denom(const Rational& x) { return boost::multiprecision::denominator(x); }

inline bool is_integer(const Rational& x) { return denom(x) == 1; }

// Throws unless x is an integer that fits in long long.
long long to_integer(const Rational& x);

long long to_ll(const Int& x);

// Accepts "p" or "p/q" with optional leading sign; q must be nonzero.
Rational parse_rational(const std::string& s);

// Canonical form: "p" when the denominator is 1, else "p/q" with q > 0.
std::string format_rational(const Rational& x);

}  // namespace wallcross
