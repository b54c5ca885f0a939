#include "wallcross/grassflip.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace wallcross::grassflip {

namespace {

void check_args(long long i, long long w_minus, long long w_plus) {
  if (w_minus < 1 || w_plus < 1)
    throw std::invalid_argument("ranks must be >= 1");
  if (i < 1 || i > std::min(w_minus, w_plus))
    throw std::invalid_argument("need 1 <= i <= min(w-, w+), got i=" + std::to_string(i));
}

}  // namespace

FlipGeometry geometry(long long i, long long w_minus, long long w_plus) {
  check_args(i, w_minus, w_plus);
  FlipGeometry g;
  g.i = i;
  g.w_minus = w_minus;
  g.w_plus = w_plus;
  g.dim_y = i * (w_plus + w_minus - i);
  g.exc_dim_minus = g.dim_y - (w_plus + 1 - i);
  g.exc_dim_plus = g.dim_y - (w_minus + 1 - i);
  g.canonical_weight = w_plus - w_minus;
  if (w_plus == w_minus)
    g.kind = SurgeryKind::Flop;
  else if (i == std::min(w_minus, w_plus))
    g.kind = SurgeryKind::Divisorial;
  else
    g.kind = SurgeryKind::Flip;
  return g;
}

std::vector<long long> determinantal_stratum_dims(long long i, long long w_minus, long long w_plus) {
  check_args(i, w_minus, w_plus);
  std::vector<long long> dims;
  dims.reserve(static_cast<std::size_t>(i) + 1);
  for (long long j = 0; j <= i; ++j) dims.push_back(j * (w_plus + w_minus - j));
  return dims;
}

std::optional<long long> sod_summand_count_standard(long long i, long long w_minus, long long w_plus) {
  check_args(i, w_minus, w_plus);
  if (w_plus == w_minus) return 0;  // flop: derived equivalence
  if (i == 1) return w_plus - w_minus;
  return std::nullopt;
}

}  // namespace wallcross::grassflip
