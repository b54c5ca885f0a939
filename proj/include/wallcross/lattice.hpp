#pragma once

#include "wallcross/rational.hpp"

#include <utility>

namespace wallcross::lattice {

using wallcross::Rational;

// Chern character (r, c1, ch2) of a framed class on the plane blown up at a
// point, written against the basis {[pt]} in degree 4 and c1 = -k*C where C is
// the exceptional curve. k > 0 means c1 points "away" from C.
//
// Integrality: 2*ch2 and k/2 - ch2 are integers (the latter makes the
// dimension-vector coordinates integral). Both are enforced on construction,
// so ch2 always has denominator 1 or 2.
class ChernCharacter {
 public:
  ChernCharacter(long long r, long long k, Rational ch2);

  long long r() const { return r_; }
  long long k() const { return k_; }
  const Rational& ch2() const { return ch2_; }
  long long twice_ch2() const { return to_integer(Rational(2) * ch2_); }

  friend bool operator==(const ChernCharacter& a, const ChernCharacter& b) {
    return a.r_ == b.r_ && a.k_ == b.k_ && a.ch2_ == b.ch2_;
  }
  friend bool operator!=(const ChernCharacter& a, const ChernCharacter& b) { return !(a == b); }

 private:
  long long r_;
  long long k_;
  Rational ch2_;
};

// Quiver dimension vector (d0, d1, dinf), all entries >= 0.
class DimensionVector {
 public:
  DimensionVector(long long d0, long long d1, long long dinf);

  long long d0() const { return d0_; }
  long long d1() const { return d1_; }
  long long dinf() const { return dinf_; }

  friend bool operator==(const DimensionVector& a, const DimensionVector& b) {
    return a.d0_ == b.d0_ && a.d1_ == b.d1_ && a.dinf_ == b.dinf_;
  }

 private:
  long long d0_, d1_, dinf_;
};

// d0 = k/2 - ch2, d1 = -k/2 - ch2, dinf = r. Throws "class not representable"
// when a coordinate would be negative.
DimensionVector to_dim_vector(const ChernCharacter& v);
ChernCharacter from_dim_vector(const DimensionVector& d);

// ch(O_C(-m-1)) = (0, C, -(m + 1/2)); dimension vector (m, m+1, 0).
ChernCharacter class_cm(long long m);

// v - i * class_cm(m); the class of the complement E' in a length-i
// Brill-Noether stratum at the wall of index m.
ChernCharacter subtract_destabilizer(const ChernCharacter& v, long long i, long long m);

// Multiplication by exp(t*C), C^2 = -[pt]:
//   r -> r,  k -> k - t*r,  ch2 -> ch2 + t*k - t^2*r/2.
ChernCharacter twist_by_C(const ChernCharacter& v, long long t);

// Euler pairing chi(E, F) = sum (-1)^j ext^j(E, F) by Riemann-Roch on the
// blown-up plane (c1 of the surface = 3H - C, H.C = 0, H^2 = -C^2 = [pt]):
//
//   chi = r1*s2 + r2*s1 + k1*k2 + (r2*k1 - r1*k2)/2 + r1*r2,  s = ch2.
//
// The framing twist is immaterial here: every pairing the callers consume has
// one argument supported on C, and C.(line at infinity) = 0.
long long euler_pairing(const ChernCharacter& a, const ChernCharacter& b);

// Expected dimension of the framed moduli space:
//   dinf*(d0 + d1) - (d0 - d1)^2 = -2*r*ch2 - k^2.
// May be negative; negative values are used downstream as an emptiness proxy.
long long moduli_dim(const ChernCharacter& v);

// Z-linear structure, mainly for bilinearity checks. Both invariants are
// preserved by integer combinations.
ChernCharacter add(const ChernCharacter& a, const ChernCharacter& b);
ChernCharacter scale(long long n, const ChernCharacter& v);

}  // namespace wallcross::lattice
