#pragma once

#include "wallcross/rational.hpp"

#include <vector>

namespace wallcross::bott {

using wallcross::Int;

// Homogeneous bundles on Gr(i, n) are labelled by weights alpha in Z^n split
// into blocks beta = alpha[0..i) and gamma = alpha[i..n), each weakly
// decreasing: V(alpha) = K_beta(S*) (x) K_gamma(Q*), where S is the
// tautological subbundle, Q the quotient, and K the Weyl functor normalized by
// K_(k,0,...,0) = Sym^k and K_(1,...,1) = det.
//
// Examples: alpha = (k, 0...0 | 0...0) is Sym^k S*, alpha = (0...0 | 0...0,-1)
// is Q, and alpha = (1,0...0 | 0...0,-1) is the tangent bundle S* (x) Q.

// True iff the concatenated weight is weakly decreasing (then all higher
// cohomology of V(alpha) vanishes). Throws if a block is not weakly
// decreasing or i is out of range.
bool is_dominant_pair(const std::vector<long long>& alpha, long long i);

struct CohomologyResult {
  bool all_vanish;
  long long degree;  // the unique nonvanishing degree, when !all_vanish
  Int dim;

  friend bool operator==(const CohomologyResult& a, const CohomologyResult& b) {
    if (a.all_vanish != b.all_vanish) return false;
    return a.all_vanish || (a.degree == b.degree && a.dim == b.dim);
  }
};

// Borel-Weil-Bott on Gr(i, n): add rho = (n-1, ..., 1, 0) to alpha. A repeated
// entry kills all cohomology; otherwise H^l is the GL(n)-irreducible with
// highest weight sort_desc(alpha + rho) - rho, where l is the number of
// inversions needed to sort.
CohomologyResult bwb_cohomology(const std::vector<long long>& alpha, long long i, long long n);

// Dimension of the GL(len(lambda))-irreducible with highest weight lambda
// (a weakly decreasing integer vector), by the Weyl dimension formula.
Int weyl_dim(const std::vector<long long>& lambda);

// S* (x) Sym^k S* = K_(k,1,0,...) + K_(k+1,0,...) as GL(i)-functors (k >= 1).
// For i = 1 only the second summand survives. Returns the list of weights.
std::vector<std::vector<long long>> pieri_svee_symk(long long k, long long i);

struct LemmaVanishing {
  bool tangent_twist;  // H^1(T (x) Sym^k S*) = 0
  bool sub_twist;      // H^1(S (x) Sym^k S*) = 0
  bool sym_only;       // H^1(Sym^k S*) = 0
};

// Decomposes each of the three bundles into V(alpha) summands (via the Pieri
// rule and T = S* (x) Q) and checks degree-1 vanishing summand by summand.
LemmaVanishing check_lemma_vanishing(long long n, long long i, long long k);

}  // namespace wallcross::bott
