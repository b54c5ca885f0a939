#include "wallcross/strata.hpp"

#include <stdexcept>

namespace wallcross::strata {

using lattice::class_cm;
using lattice::euler_pairing;
using lattice::moduli_dim;
using lattice::subtract_destabilizer;

namespace {

void check_vmi(const ChernCharacter& v, long long m, long long i) {
  if (v.r() <= 0) throw std::invalid_argument("need rank r > 0");
  if (m < 0) throw std::invalid_argument("need wall index m >= 0");
  if (i < 1) throw std::invalid_argument("need stratum index i >= 1");
}

// d-vector of v with negativity allowed; stratum emptiness is decided here.
struct RawDims {
  long long d0, d1;
};

RawDims raw_dims(const ChernCharacter& v) {
  long long d0 = to_integer(Rational(v.k(), 2) - v.ch2());
  return {d0, d0 - v.k()};
}

}  // namespace

BNRanks bn_ranks(const ChernCharacter& v, long long m, long long i) {
  check_vmi(v, m, i);
  ChernCharacter vprime = subtract_destabilizer(v, i, m);
  ChernCharacter cm = class_cm(m);
  BNRanks out{-euler_pairing(vprime, cm), -euler_pairing(cm, vprime)};
  // Closed forms from Riemann-Roch on the exceptional curve.
  if (out.w_minus != v.r() * m + v.k() + i || out.w_plus != v.r() * (m + 1) + v.k() + i)
    throw std::logic_error("Brill-Noether rank cross-check failed");
  return out;
}

std::pair<long long, long long> codim_formula(const ChernCharacter& v, long long m, long long i) {
  BNRanks rk = bn_ranks(v, m, i);
  return {i * rk.w_plus, i * rk.w_minus};
}

StratumReport stratum_report(const ChernCharacter& v, long long m, long long i) {
  check_vmi(v, m, i);
  StratumReport s;
  s.m = m;
  s.i = i;
  s.v = v;
  s.vprime = subtract_destabilizer(v, i, m);
  BNRanks rk = bn_ranks(v, m, i);
  s.rk_w_minus = rk.w_minus;
  s.rk_w_plus = rk.w_plus;
  s.dim_base = moduli_dim(s.vprime);
  s.dim_g_minus = s.dim_base + i * (rk.w_minus - i);
  s.dim_g_plus = s.dim_base + i * (rk.w_plus - i);
  s.codim_minus = i * rk.w_plus;
  s.codim_plus = i * rk.w_minus;
  RawDims d = raw_dims(s.vprime);
  s.nonempty = s.dim_base >= 0 && d.d0 >= 0 && d.d1 >= 0 && i <= rk.w_minus;
  return s;
}

std::string GrassFiber::name() const {
  return "Gr(" + std::to_string(i) + "," + std::to_string(n) + ")";
}

bool GrassFiber::is_projective() const { return i == 0 || i == n || i == 1 || n - i == 1; }

std::string GrassFiber::alias() const {
  if (!is_projective()) return "";
  long long d = dim();
  return d == 0 ? "pt" : "P^" + std::to_string(d);
}

GrassFiber stratum_fiber(const StratumReport& s, Side side) {
  return {s.i, side == Side::Minus ? s.rk_w_minus : s.rk_w_plus};
}

std::string NormalBundleDescriptor::render() const {
  std::string out = "S(" + std::to_string(i) + " of " + std::to_string(ambient_rank) + ") (x) W(" +
                    std::to_string(other_rank) + "), rank " + std::to_string(stratum_normal_rank);
  if (line_fiber) {
    out += "; on a fiber: O(-1)^" + std::to_string(fiber_minus_ones);
    if (fiber_trivials > 0) out += " + O^" + std::to_string(fiber_trivials);
  }
  return out;
}

NormalBundleDescriptor normal_bundle_descriptor(const ChernCharacter& v, long long m, long long i,
                                                Side side) {
  StratumReport s = stratum_report(v, m, i);
  NormalBundleDescriptor n;
  n.side = side;
  n.i = i;
  n.ambient_rank = side == Side::Minus ? s.rk_w_minus : s.rk_w_plus;
  n.other_rank = side == Side::Minus ? s.rk_w_plus : s.rk_w_minus;
  n.stratum_normal_rank = i * n.other_rank;
  n.dim_base = s.dim_base;
  n.fiber_normal_rank = n.stratum_normal_rank + s.dim_base;
  n.line_fiber = i == 1;
  n.fiber_minus_ones = n.other_rank;
  n.fiber_trivials = s.dim_base;
  return n;
}

namespace {

// Strata beyond d1(v)/(m+1) have a negative d1-coordinate, hence are empty.
long long stratum_index_bound(const ChernCharacter& v, long long m) {
  RawDims d = raw_dims(v);
  if (d.d1 < 0) return 0;
  return d.d1 / (m + 1);
}

}  // namespace

ContractionReport contraction_report(const ChernCharacter& v, long long m, Side side) {
  check_vmi(v, m, 1);
  ContractionReport rep;
  rep.m = m;
  rep.side = side;
  rep.k_sign = side == Side::Plus ? CanonicalSign::KNegative : CanonicalSign::KPositive;
  long long bound = stratum_index_bound(v, m);
  bool divisorial = false;
  bool contracted = false;
  for (long long i = 1; i <= bound; ++i) {
    StratumReport s = stratum_report(v, m, i);
    if (!s.nonempty) continue;
    rep.per_stratum.push_back(s);
    GrassFiber f = stratum_fiber(s, side);
    if (f.dim() == 0) continue;  // point fibers: nothing contracted
    contracted = true;
    long long codim = side == Side::Minus ? s.codim_minus : s.codim_plus;
    if (codim == 1) divisorial = true;
  }
  rep.kind = !contracted ? ContractionKind::Isomorphism
             : divisorial ? ContractionKind::Divisorial
                          : ContractionKind::Small;
  return rep;
}

WallCrossing wall_crossing(const ChernCharacter& v, long long m) {
  return {m, contraction_report(v, m, Side::Minus), contraction_report(v, m, Side::Plus)};
}

SodSummary wall_sod_summary(const ChernCharacter& v, long long m) {
  ContractionReport plus = contraction_report(v, m, Side::Plus);
  SodSummary out;
  if (plus.per_stratum.empty() || plus.kind == ContractionKind::Isomorphism) return out;  // count 0
  bool deeper = false;
  for (const auto& s : plus.per_stratum)
    if (s.i >= 2) deeper = true;
  // A divisorial crossing is a blow-up along the full (possibly singular)
  // center, so deeper strata do not add summands. A small crossing with a
  // deeper stratum is a genuine higher Grassmannian flip: open.
  if (deeper && plus.kind != ContractionKind::Divisorial) {
    out.known = false;
    return out;
  }
  const StratumReport& top = plus.per_stratum.front();
  out.count = top.rk_w_plus - top.rk_w_minus;  // = r
  out.base_class = top.vprime;
  out.base_dim = top.dim_base;
  return out;
}

std::vector<WallCrossing> wall_scan(const ChernCharacter& v, long long* m_stop_out) {
  if (v.r() <= 0) throw std::invalid_argument("need rank r > 0");
  long long dim = moduli_dim(v);
  std::vector<WallCrossing> out;
  long long m = 0;
  while (true) {
    // Expected dimension of the (m, i) base, maximized over integer i >= 1.
    // dim_base(m, i) = dim - i*(2rm + r + 2k + i) is concave in i, so checking
    // up to the vertex (plus one step) is enough.
    long long lin = 2 * v.r() * m + v.r() + 2 * v.k();
    bool any = false;
    long long hi = lin < 0 ? (-lin) / 2 + 1 : 1;
    for (long long i = 1; i <= hi + 1 && !any; ++i)
      if (dim - i * (lin + i) >= 0) any = true;
    if (!any) break;
    out.push_back(wall_crossing(v, m));
    ++m;
    if (m > 1000000) throw std::logic_error("wall scan failed to terminate");
  }
  if (m_stop_out) *m_stop_out = m;
  return out;
}

MmpLedger mmp_ledger(const ChernCharacter& v) {
  if (v.r() <= 0) throw std::invalid_argument("need rank r > 0");
  if (v.k() != 0)
    throw std::domain_error(
        "the ledger is supported for k = 0 classes only; for k != 0 use per-wall "
        "contraction reports");
  MmpLedger ledger;
  ledger.v = v;
  ledger.walls = wall_scan(v, &ledger.m_stop);
  ledger.sod.reserve(ledger.walls.size());
  for (const auto& w : ledger.walls) ledger.sod.push_back(wall_sod_summary(v, w.m));
  return ledger;
}

std::pair<long long, ChernCharacter> ideal_stability_index(long long n, long long c) {
  if (n < 0 || c < 0) throw std::invalid_argument("need n, c >= 0");
  if (c > n)
    throw std::invalid_argument("at most n of the n points can lie on the exceptional curve");
  ChernCharacter residual(1, 0, Rational(-(n - c)));
  return {c, lattice::twist_by_C(residual, -1)};
}

std::string to_string(Side s) { return s == Side::Minus ? "minus" : "plus"; }

std::string to_string(ContractionKind k) {
  switch (k) {
    case ContractionKind::Isomorphism: return "isomorphism";
    case ContractionKind::Small: return "small";
    default: return "divisorial";
  }
}

std::string to_string(CanonicalSign s) {
  return s == CanonicalSign::KNegative ? "K-negative" : "K-positive";
}

}  // namespace wallcross::strata
