#pragma once

#include "wallcross/qlinalg.hpp"

namespace wallcross::adhm {

using qlinalg::Matrix;

// ADHM data for framed torsion-free sheaves on the plane:
// B1, B2 : V -> V (n x n), i : W -> V (n x r), j : V -> W (r x n),
// subject to [B1, B2] + i j = 0.
struct ADHMDataP2 {
  long long n, r;
  Matrix B1, B2, i_map, j_map;

  ADHMDataP2(long long n, long long r, Matrix B1, Matrix B2, Matrix i_map, Matrix j_map);
};

Matrix relation_residual_p2(const ADHMDataP2& x);
bool check_relation_p2(const ADHMDataP2& x);

// Stability: the smallest B1,B2-invariant subspace containing Im(i) is all of
// V (Krylov closure, exact arithmetic, terminates in <= n rounds).
bool is_stable_p2(const ADHMDataP2& x);

// Representation of the blown-up-plane quiver
//
//     0 <--B1,B2-- 1          d : V0 -> V1,  i : Vinf -> V0,  j : V1 -> Vinf
//     0 ---d-----> 1
//     1 ---j-----> inf --i--> 0
//
// with the single relation B1 d B2 - B2 d B1 + i j = 0 (a map V1 -> V0).
struct BlowupQuiverRep {
  long long d0, d1, dinf;
  Matrix B1, B2, d, i_map, j_map;

  BlowupQuiverRep(long long d0, long long d1, long long dinf, Matrix B1, Matrix B2, Matrix d,
                  Matrix i_map, Matrix j_map);
};

Matrix relation_residual_blowup(const BlowupQuiverRep& rep);
bool check_relation_blowup(const BlowupQuiverRep& rep);

// (B1, B2, d, i, j) -> (d B1, d B2, d i, j) on V = V1. Requires d0 == d1.
// When the blow-up relation holds the image satisfies the plane relation;
// when d is invertible this is the chamber-zero identification.
ADHMDataP2 collapse_to_p2(const BlowupQuiverRep& rep);

// The rigid representation with dimension vector (m, m+1, 0) realizing
// O_C(-m-1): B1 = (1|0), B2 = (0|1), everything else zero.
BlowupQuiverRep ocm_rep(long long m);

BlowupQuiverRep direct_sum(const BlowupQuiverRep& a, const BlowupQuiverRep& b);

// Dimension of the space of intertwiners (phi0, phi1, phiinf) between two
// representations, as the kernel of the exact linear system
//   phi_target . arrow_src = arrow_dst . phi_source   (all five arrows).
// framed forces phiinf = 0 (framing is fixed, not transformed).
long long hom_dim(const BlowupQuiverRep& src, const BlowupQuiverRep& dst, bool framed);

// Brill-Noether index of rep at the wall of index m:
// dim Hom(rep of O_C(-m-1), rep), framing fixed.
long long bn_index(const BlowupQuiverRep& rep, long long m);

struct StabilityPair {
  bool cond1;  // Hom(rep, O_C(-m-1)-rep) = 0
  bool cond2;  // Hom(O_C(-m)-rep, rep) = 0
};

// Both Hom-vanishing conditions at the chamber of index m >= 1. m = 0 is
// rejected: below the first wall only the first condition is meaningful, use
// zero_stability_partial for that.
StabilityPair m_stability_test(const BlowupQuiverRep& rep, long long m);

// The surviving condition at m = 0: Hom(rep, O_C(-1)-rep) = 0.
bool zero_stability_partial(const BlowupQuiverRep& rep);

}  // namespace wallcross::adhm
