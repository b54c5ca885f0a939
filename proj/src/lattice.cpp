#include "wallcross/lattice.hpp"

namespace wallcross::lattice {

ChernCharacter::ChernCharacter(long long r, long long k, Rational ch2)
    : r_(r), k_(k), ch2_(std::move(ch2)) {
  Rational twice = Rational(2) * ch2_;
  if (!is_integer(twice))
    throw std::invalid_argument("ch2 must be a half-integer, got " + format_rational(ch2_));
  if (!is_integer(Rational(k_, 2) - ch2_))
    throw std::invalid_argument("k/2 - ch2 must be integral (k=" + std::to_string(k_) +
                                ", ch2=" + format_rational(ch2_) + ")");
}

DimensionVector::DimensionVector(long long d0, long long d1, long long dinf)
    : d0_(d0), d1_(d1), dinf_(dinf) {
  if (d0 < 0 || d1 < 0 || dinf < 0)
    throw std::invalid_argument("dimension vector entries must be >= 0");
}

DimensionVector to_dim_vector(const ChernCharacter& v) {
  long long d0 = to_integer(Rational(v.k(), 2) - v.ch2());
  long long d1 = d0 - v.k();
  if (d0 < 0 || d1 < 0)
    throw std::domain_error("class not representable: dimension vector (" + std::to_string(d0) +
                            ", " + std::to_string(d1) + ", " + std::to_string(v.r()) +
                            ") has a negative entry");
  return DimensionVector(d0, d1, v.r());
}

ChernCharacter from_dim_vector(const DimensionVector& d) {
  return ChernCharacter(d.dinf(), d.d0() - d.d1(), Rational(-(d.d0() + d.d1()), 2));
}

ChernCharacter class_cm(long long m) {
  if (m < 0) throw std::invalid_argument("wall index m must be >= 0");
  return ChernCharacter(0, -1, -Rational(2 * m + 1, 2));
}

ChernCharacter subtract_destabilizer(const ChernCharacter& v, long long i, long long m) {
  if (i < 1) throw std::invalid_argument("stratum index i must be >= 1");
  return add(v, scale(-i, class_cm(m)));
}

ChernCharacter twist_by_C(const ChernCharacter& v, long long t) {
  return ChernCharacter(v.r(), v.k() - t * v.r(),
                        v.ch2() + Rational(t) * v.k() - Rational(t * t * v.r(), 2));
}

long long euler_pairing(const ChernCharacter& a, const ChernCharacter& b) {
  Rational chi = Rational(a.r()) * b.ch2() + Rational(b.r()) * a.ch2() +
                 Rational(a.k() * b.k()) + Rational(b.r() * a.k() - a.r() * b.k(), 2) +
                 Rational(a.r() * b.r());
  return to_integer(chi);  // integral for every pair of valid classes
}

long long moduli_dim(const ChernCharacter& v) {
  return -v.r() * v.twice_ch2() - v.k() * v.k();
}

ChernCharacter add(const ChernCharacter& a, const ChernCharacter& b) {
  return ChernCharacter(a.r() + b.r(), a.k() + b.k(), a.ch2() + b.ch2());
}

ChernCharacter scale(long long n, const ChernCharacter& v) {
  return ChernCharacter(n * v.r(), n * v.k(), Rational(n) * v.ch2());
}

}  // namespace wallcross::lattice
