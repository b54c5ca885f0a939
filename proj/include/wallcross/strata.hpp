#pragma once

#include "wallcross/lattice.hpp"

#include <string>
#include <utility>
#include <vector>

namespace wallcross::strata {

using lattice::ChernCharacter;

// Ranks of the two Brill-Noether bundles over the i-th stratum of the wall of
// index m: W- has rank r*m + k + i, W+ has rank r*(m+1) + k + i. The
// difference is always r.
struct BNRanks {
  long long w_minus;
  long long w_plus;
};

// Cross-validated against euler_pairing: rk W- = -chi(v', c_m) and
// rk W+ = -chi(c_m, v') where v' = v - i*c_m.
BNRanks bn_ranks(const ChernCharacter& v, long long m, long long i);

// (codim_minus, codim_plus) = (i * rk W+, i * rk W-).
std::pair<long long, long long> codim_formula(const ChernCharacter& v, long long m, long long i);

enum class Side { Minus, Plus };

// The i-th Brill-Noether stratum of the crossing at wall m: on either side it
// is a Grassmannian bundle Gr(i, W+/-) over the common base of expected
// dimension moduli_dim(v - i*c_m).
struct StratumReport {
  long long m = 0;
  long long i = 0;
  ChernCharacter v;
  ChernCharacter vprime;
  long long rk_w_minus = 0;
  long long rk_w_plus = 0;
  long long dim_base = 0;  // may be negative: treated as empty
  long long dim_g_minus = 0;
  long long dim_g_plus = 0;
  long long codim_minus = 0;
  long long codim_plus = 0;
  bool nonempty = false;

  StratumReport() : v(0, 0, 0), vprime(0, 0, 0) {}
};

StratumReport stratum_report(const ChernCharacter& v, long long m, long long i);

// Grassmannian fiber Gr(i, n) of a stratum; carries a projective-space alias
// when min(i, n-i) <= 1.
struct GrassFiber {
  long long i;
  long long n;
  long long dim() const { return i * (n - i); }
  std::string name() const;        // "Gr(i,n)"
  bool is_projective() const;      // min(i, n-i) <= 1
  std::string alias() const;       // "P^d" or "pt" when projective, else ""
};

GrassFiber stratum_fiber(const StratumReport& s, Side side);

// Symbolic normal-bundle data of a stratum and of its Grassmannian fibers.
// Along the stratum the normal bundle is S (x) W_other (rank i * rk_other);
// restricted to one fiber it extends by a trivial bundle of rank dim_base.
// For i = 1 the fiber restriction splits as O(-1)^rk_other + O^dim_base.
struct NormalBundleDescriptor {
  Side side = Side::Plus;
  long long i = 0;
  long long ambient_rank = 0;        // rk W on this side
  long long other_rank = 0;          // rk W on the other side
  long long stratum_normal_rank = 0; // i * other_rank = codim of the stratum
  long long dim_base = 0;
  long long fiber_normal_rank = 0;   // stratum_normal_rank + dim_base
  bool line_fiber = false;           // i == 1: splitting below applies
  long long fiber_minus_ones = 0;    // multiplicity of O(-1) on the P-fiber
  long long fiber_trivials = 0;      // multiplicity of O

  std::string render() const;
};

NormalBundleDescriptor normal_bundle_descriptor(const ChernCharacter& v, long long m, long long i,
                                                Side side);

enum class ContractionKind { Isomorphism, Small, Divisorial };
enum class CanonicalSign { KNegative, KPositive };

// One side of the crossing at wall m. per_stratum lists the nonempty strata.
// kind looks at the strata actually contracted (positive-dimensional fibers):
// none -> Isomorphism; one of codimension 1 -> Divisorial; else Small.
struct ContractionReport {
  long long m = 0;
  Side side = Side::Plus;
  CanonicalSign k_sign = CanonicalSign::KNegative;
  ContractionKind kind = ContractionKind::Isomorphism;
  std::vector<StratumReport> per_stratum;
};

ContractionReport contraction_report(const ChernCharacter& v, long long m, Side side);

struct WallCrossing {
  long long m = 0;
  ContractionReport minus;
  ContractionReport plus;
};

WallCrossing wall_crossing(const ChernCharacter& v, long long m);

// Per-wall semiorthogonal-complement summary. Settled cases: no contracted
// stratum (count 0); all nonempty strata with i = 1, or a divisorial wall,
// give rk W+ - rk W- = r copies of the derived category of the i = 1 base.
// A small wall with a deeper stratum is left unknown.
struct SodSummary {
  bool known = true;
  long long count = 0;
  ChernCharacter base_class;
  long long base_dim = 0;

  SodSummary() : base_class(0, 0, 0) {}
};

SodSummary wall_sod_summary(const ChernCharacter& v, long long m);

// Runs the minimal-model sequence for k = 0 classes: walls m = 0..m_stop-1,
// where m_stop is the least m with every stratum of expected dimension < 0
// (monotone in m and i, so everything beyond is empty too).
struct MmpLedger {
  ChernCharacter v;
  long long m_stop = 0;
  std::vector<WallCrossing> walls;
  std::vector<SodSummary> sod;  // parallel to walls

  MmpLedger() : v(0, 0, 0) {}
};

MmpLedger mmp_ledger(const ChernCharacter& v);

// Same scan without the k = 0 scope guard, for callers that accept
// sheaf-level caveats. Stops at the same expected-dimension criterion.
std::vector<WallCrossing> wall_scan(const ChernCharacter& v, long long* m_stop_out);

// For n points on the blown-up plane, c of them on the exceptional curve:
// the ideal sheaf is exactly c-stable and destabilizes below via the twisted
// ideal of the off-curve residual, of class twist_by_C((1, 0, -(n-c)), -1).
std::pair<long long, ChernCharacter> ideal_stability_index(long long n, long long c);

std::string to_string(Side s);
std::string to_string(ContractionKind k);
std::string to_string(CanonicalSign s);

}  // namespace wallcross::strata
