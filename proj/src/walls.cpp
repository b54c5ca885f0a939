#include "wallcross/walls.hpp"

namespace wallcross::walls {

WallPosition classify_parameter(const StabilityParam& zeta) {
  const Rational& z0 = zeta.zeta0;
  const Rational& z1 = zeta.zeta1;
  if (z0 == 0) return {PositionKind::Unclassified, 0};
  if (z0 < 0) {
    if (z1 < 0) return {PositionKind::ChamberZero, 0};
    return {PositionKind::Unclassified, 0};
  }
  // zeta0 > 0 from here on.
  if (z1 > 0) return {PositionKind::Unclassified, 0};
  if (z1 == 0) return {PositionKind::Wall, 0};
  if (z0 + z1 <= 0) return {PositionKind::Unclassified, 0};  // at or past the accumulation ray
  // Solve m*z0 + (m+1)*z1 = 0: m = -z1 / (z0 + z1), a positive rational here.
  Rational x = -z1 / (z0 + z1);
  if (is_integer(x)) return {PositionKind::Wall, to_integer(x)};
  // Strictly between walls ceil(x) and ceil(x) - 1.
  Int m = numer(x) / denom(x) + 1;  // ceil for positive non-integer x
  return {PositionKind::Chamber, to_ll(m)};
}

StabilityParam chamber_sample(long long m) {
  if (m < 0) throw std::invalid_argument("chamber index must be >= 0");
  if (m == 0) return {Rational(-1), Rational(-1)};
  // Midpoint of the bounding slopes -m/(m+1) and -(m-1)/m at zeta0 = 1.
  Rational lo(-m, m + 1), hi(-(m - 1), m);
  return {Rational(1), (lo + hi) / 2};
}

std::pair<long long, long long> wall_between(long long m) {
  if (m < 0) throw std::invalid_argument("wall index must be >= 0");
  return {m, m + 1};  // always coprime
}

}  // namespace wallcross::walls
