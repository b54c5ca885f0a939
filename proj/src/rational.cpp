#include "wallcross/rational.hpp"

#include <cctype>
#include <limits>

namespace wallcross {

long long to_ll(const Int& x) {
  if (x < std::numeric_limits<long long>::min() || x > std::numeric_limits<long long>::max())
    throw std::overflow_error("integer out of range: " + x.str());
  return static_cast<long long>(x);
}

long long to_integer(const Rational& x) {
  if (!is_integer(x)) throw std::domain_error("expected an integer, got " + format_rational(x));
  return to_ll(numer(x));
}

namespace {

bool valid_signed_digits(const std::string& s) {
  std::size_t pos = 0;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
  if (pos == s.size()) return false;
  for (; pos < s.size(); ++pos)
    if (!std::isdigit(static_cast<unsigned char>(s[pos]))) return false;
  return true;
}

// cpp_int's string constructor rejects a leading '+'.
Int parse_int(const std::string& s) { return Int(s[0] == '+' ? s.substr(1) : s); }

}  // namespace

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!valid_signed_digits(s)) throw std::invalid_argument("bad rational: '" + s + "'");
    return Rational(parse_int(s));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!valid_signed_digits(num) || !valid_signed_digits(den))
    throw std::invalid_argument("bad rational: '" + s + "'");
  Int q = parse_int(den);
  if (q == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  return Rational(parse_int(num), q);
}

std::string format_rational(const Rational& x) {
  if (is_integer(x)) return numer(x).str();
  return numer(x).str() + "/" + denom(x).str();
}

}  // namespace wallcross
