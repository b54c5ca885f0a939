#pragma once

#include "wallcross/rational.hpp"

#include <utility>

namespace wallcross::walls {

using wallcross::Rational;

// Stability parameter zeta = (zeta0, zeta1) for the framed quiver. The region
// of interest is zeta0 > 0, where the wall of index m is the ray
//   m*zeta0 + (m+1)*zeta1 = 0,
// and the chamber of index m (m >= 1) lies strictly between walls m and m-1.
// The chamber of index 0 is the negative quadrant zeta0, zeta1 < 0.
struct StabilityParam {
  Rational zeta0;
  Rational zeta1;
};

enum class PositionKind { Wall, Chamber, ChamberZero, Unclassified };

struct WallPosition {
  PositionKind kind;
  long long m;  // meaningful for Wall and Chamber only

  friend bool operator==(const WallPosition& a, const WallPosition& b) {
    return a.kind == b.kind && ((a.kind != PositionKind::Wall && a.kind != PositionKind::Chamber) || a.m == b.m);
  }
};

// Exact classification; never returns Chamber(0) (that case is ChamberZero).
// Points with zeta0 = 0, with zeta1 >= 0 on zeta0 > 0 other than the wall
// m = 0, or at/past the accumulation ray zeta0 + zeta1 = 0 are Unclassified.
WallPosition classify_parameter(const StabilityParam& zeta);

// A point interior to the chamber of index m. m = 0 gives (-1, -1); m >= 1
// gives zeta0 = 1 and zeta1 the midpoint of the two bounding wall slopes.
StabilityParam chamber_sample(long long m);

// Coprime integer coefficients (a, b) of the wall a*zeta0 + b*zeta1 = 0.
std::pair<long long, long long> wall_between(long long m);

}  // namespace wallcross::walls
