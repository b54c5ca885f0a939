#pragma once

#include <optional>
#include <vector>

namespace wallcross::grassflip {

enum class SurgeryKind { Isomorphism, Divisorial, Flip, Flop };

// Local model of a wall crossing: the two total spaces
//   Y(+/-) = Tot over Gr(i, W(+/-)) of S(+/-) (x) W(-/+),
// both resolving the determinantal variety Z of maps W(-)* -> W(+) of rank
// <= i. w_minus, w_plus are the ranks of W(-), W(+).
struct FlipGeometry {
  long long i;
  long long w_minus;
  long long w_plus;
  long long dim_y;             // i*(w_plus + w_minus - i), both sides
  long long exc_dim_minus;     // dim_y - (w_plus + 1 - i)
  long long exc_dim_plus;      // dim_y - (w_minus + 1 - i)
  long long canonical_weight;  // w_plus - w_minus; det(S)-power linearizing omega_Y
  SurgeryKind kind;
};

// Requires 1 <= i <= min(w_minus, w_plus). kind is Flop when the ranks agree,
// Divisorial when i equals the smaller rank (the resolved side contracts a
// divisor, the other side is an isomorphism), Flip otherwise.
FlipGeometry geometry(long long i, long long w_minus, long long w_plus);

// dim Z_j = j*(w_plus + w_minus - j) for j = 0..i (rank-stratification of Z).
std::vector<long long> determinantal_stratum_dims(long long i, long long w_minus, long long w_plus);

// Size of the semiorthogonal complement of D(Y-) inside D(Y+) in the cases
// where it is settled: i = 1 (standard flip/blow-up) gives w_plus - w_minus
// copies of the base; a flop gives 0. Unknown (nullopt) for i >= 2 with
// unequal ranks.
std::optional<long long> sod_summand_count_standard(long long i, long long w_minus, long long w_plus);

}  // namespace wallcross::grassflip
