#include "wallcross/bott.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace wallcross::bott {

namespace {

bool weakly_decreasing(const std::vector<long long>& v, std::size_t lo, std::size_t hi) {
  for (std::size_t p = lo + 1; p < hi; ++p)
    if (v[p - 1] < v[p]) return false;
  return true;
}

void check_blocks(const std::vector<long long>& alpha, long long i, long long n) {
  if (n != static_cast<long long>(alpha.size()))
    throw std::invalid_argument("weight length " + std::to_string(alpha.size()) +
                                " does not match n=" + std::to_string(n));
  if (i < 1 || i >= n) throw std::invalid_argument("need 1 <= i < n");
  auto ui = static_cast<std::size_t>(i);
  if (!weakly_decreasing(alpha, 0, ui) || !weakly_decreasing(alpha, ui, alpha.size()))
    throw std::invalid_argument("weight blocks must be weakly decreasing");
}

}  // namespace

bool is_dominant_pair(const std::vector<long long>& alpha, long long i) {
  check_blocks(alpha, i, static_cast<long long>(alpha.size()));
  return weakly_decreasing(alpha, 0, alpha.size());
}

Int weyl_dim(const std::vector<long long>& lambda) {
  if (!weakly_decreasing(lambda, 0, lambda.size()))
    throw std::invalid_argument("highest weight must be weakly decreasing");
  Int num = 1, den = 1;
  std::size_t n = lambda.size();
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) {
      num *= Int(lambda[p] - lambda[q]) + Int(q - p);
      den *= Int(q - p);
    }
  return num / den;  // exact
}

CohomologyResult bwb_cohomology(const std::vector<long long>& alpha, long long i, long long n) {
  check_blocks(alpha, i, n);
  std::vector<long long> w(alpha);
  for (std::size_t p = 0; p < w.size(); ++p) w[p] += n - 1 - static_cast<long long>(p);

  long long inversions = 0;
  for (std::size_t p = 0; p < w.size(); ++p)
    for (std::size_t q = p + 1; q < w.size(); ++q) {
      if (w[p] == w[q]) return {true, 0, 0};
      if (w[p] < w[q]) ++inversions;
    }

  std::sort(w.begin(), w.end(), std::greater<>());
  for (std::size_t p = 0; p < w.size(); ++p) w[p] -= n - 1 - static_cast<long long>(p);
  return {false, inversions, weyl_dim(w)};
}

std::vector<std::vector<long long>> pieri_svee_symk(long long k, long long i) {
  if (k < 1) throw std::invalid_argument("need k >= 1");
  if (i < 1) throw std::invalid_argument("need i >= 1");
  auto ui = static_cast<std::size_t>(i);
  std::vector<std::vector<long long>> out;
  if (i >= 2) {
    std::vector<long long> nu1(ui, 0);
    nu1[0] = k;
    nu1[1] = 1;
    out.push_back(std::move(nu1));
  }
  std::vector<long long> nu2(ui, 0);
  nu2[0] = k + 1;
  out.push_back(std::move(nu2));
  return out;
}

namespace {

// alpha = (beta | gamma) padded to length n.
std::vector<long long> splice(const std::vector<long long>& beta, long long i, long long n,
                              long long gamma_last) {
  std::vector<long long> alpha(static_cast<std::size_t>(n), 0);
  std::copy(beta.begin(), beta.end(), alpha.begin());
  alpha[static_cast<std::size_t>(n) - 1] = gamma_last;
  (void)i;
  return alpha;
}

bool h1_vanishes(const std::vector<std::vector<long long>>& alphas, long long i, long long n) {
  for (const auto& a : alphas) {
    CohomologyResult c = bwb_cohomology(a, i, n);
    if (!c.all_vanish && c.degree == 1) return false;
  }
  return true;
}

}  // namespace

LemmaVanishing check_lemma_vanishing(long long n, long long i, long long k) {
  if (i < 1 || i >= n) throw std::invalid_argument("need 1 <= i < n");
  if (k < 0) throw std::invalid_argument("need k >= 0");
  auto ui = static_cast<std::size_t>(i);

  // T (x) Sym^k S* = (S* (x) Sym^k S*) (x) Q: Pieri on the S*-side, then
  // gamma = (0,...,0,-1) for the Q factor.
  std::vector<std::vector<long long>> tangent;
  if (k == 0) {
    std::vector<long long> beta(ui, 0);
    beta[0] = 1;
    tangent.push_back(splice(beta, i, n, -1));
  } else {
    for (const auto& nu : pieri_svee_symk(k, i)) tangent.push_back(splice(nu, i, n, -1));
  }

  // S (x) Sym^k S*: remove one box instead of adding one.
  std::vector<std::vector<long long>> sub;
  if (k == 0) {
    std::vector<long long> beta(ui, 0);
    beta[ui - 1] = -1;
    sub.push_back(splice(beta, i, n, 0));
  } else if (i == 1) {
    std::vector<long long> beta{k - 1};
    sub.push_back(splice(beta, i, n, 0));
  } else {
    std::vector<long long> b1(ui, 0);
    b1[0] = k;
    b1[ui - 1] = -1;
    sub.push_back(splice(b1, i, n, 0));
    std::vector<long long> b2(ui, 0);
    b2[0] = k - 1;
    sub.push_back(splice(b2, i, n, 0));
  }

  std::vector<long long> sym(static_cast<std::size_t>(n), 0);
  sym[0] = k;

  LemmaVanishing out;
  out.tangent_twist = h1_vanishes(tangent, i, n);
  out.sub_twist = h1_vanishes(sub, i, n);
  out.sym_only = h1_vanishes({sym}, i, n);
  return out;
}

}  // namespace wallcross::bott
