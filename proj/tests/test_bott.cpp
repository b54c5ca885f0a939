#include "wallcross/bott.hpp"

#include <doctest.h>

#include <random>
#include <vector>

using wallcross::Int;
using wallcross::Rational;
namespace bt = wallcross::bott;
using bt::CohomologyResult;

namespace {

Int binom(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  Int num = 1, den = 1;
  for (long long t = 1; t <= k; ++t) {
    num *= (n - k + t);
    den *= t;
  }
  return num / den;
}

// Line bundle O(d) on P^n = Gr(1, n+1): alpha = (d, 0, ..., 0).
CohomologyResult line_bundle(long long d, long long n) {
  std::vector<long long> alpha(static_cast<std::size_t>(n + 1), 0);
  alpha[0] = d;
  return bt::bwb_cohomology(alpha, 1, n + 1);
}

// Independent oracle: hook content formula for the GL(n) irreducible of
// highest weight a partition lambda,
//   dim = prod_{cells (r,c)} (n + c - r) / hook(r,c).
Int hook_content_dim(const std::vector<long long>& lambda, long long n) {
  Rational dim = 1;
  long long rows = static_cast<long long>(lambda.size());
  for (long long r = 0; r < rows; ++r)
    for (long long c = 0; c < lambda[static_cast<std::size_t>(r)]; ++c) {
      long long arm = lambda[static_cast<std::size_t>(r)] - c - 1;
      long long leg = 0;
      for (long long rr = r + 1; rr < rows; ++rr)
        if (lambda[static_cast<std::size_t>(rr)] > c) ++leg;
      long long hook = arm + leg + 1;
      dim *= Rational(n + c - r, hook);
    }
  return wallcross::numer(dim);  // exact: the product is an integer
}

}  // namespace

TEST_CASE("line bundles on projective space match the binomial formulas") {
  for (long long n = 1; n <= 5; ++n)
    for (long long d = -8; d <= 8; ++d) {
      CohomologyResult got = line_bundle(d, n);
      if (d >= 0) {
        REQUIRE(!got.all_vanish);
        CHECK(got.degree == 0);
        CHECK(got.dim == binom(n + d, n));
      } else if (d >= -n) {
        CHECK(got.all_vanish);
      } else {
        REQUIRE(!got.all_vanish);
        CHECK(got.degree == n);
        CHECK(got.dim == binom(-d - 1, n));
      }
    }
}

TEST_CASE("frozen small examples") {
  // O(-1) on P^1: weight + rho has a repeat
  CHECK(line_bundle(-1, 1).all_vanish);
  // O(-2) on P^1: H^1 one-dimensional
  CHECK(line_bundle(-2, 1) == CohomologyResult{false, 1, Int(1)});
  // O(-3) on P^2: H^2 one-dimensional (Serre dual of O(0))
  CHECK(line_bundle(-3, 2) == CohomologyResult{false, 2, Int(1)});
  // Tangent bundle of Gr(2,4): H^0 = sl_4, dimension 15
  CHECK(bt::bwb_cohomology({1, 0, 0, -1}, 2, 4) == CohomologyResult{false, 0, Int(15)});
}

TEST_CASE("weyl dimension formula on frozen weights") {
  CHECK(bt::weyl_dim({1, 1, 0, 0}) == 6);   // wedge^2 C^4
  CHECK(bt::weyl_dim({2, 1, 0}) == 8);      // adjoint of SL(3)
  CHECK(bt::weyl_dim({0, 0, 0}) == 1);
  CHECK(bt::weyl_dim({3}) == 1);            // GL(1) characters are lines
  CHECK(bt::weyl_dim({1, 0, 0, 0, 0}) == 5);
  CHECK(bt::weyl_dim({1, 1, 1, 1, 1}) == 1);  // determinant of C^5
  CHECK(bt::weyl_dim({2, 0}) == 3);           // Sym^2 C^2
  CHECK(bt::weyl_dim({-1, -1}) == 1);         // dual determinant
}

TEST_CASE("weyl dimension agrees with the hook content formula on partitions") {
  std::vector<std::vector<long long>> partitions;
  for (long long a = 0; a <= 4; ++a)
    for (long long b = 0; b <= a; ++b)
      for (long long c = 0; c <= b; ++c)
        for (long long d = 0; d <= c; ++d) partitions.push_back({a, b, c, d});
  for (const auto& lam : partitions) {
    for (long long pad = 0; pad <= 1; ++pad) {
      std::vector<long long> padded = lam;
      for (long long p = 0; p < pad; ++p) padded.push_back(0);
      long long n = static_cast<long long>(padded.size());
      CHECK(bt::weyl_dim(padded) == hook_content_dim(lam, n));
    }
  }
}

TEST_CASE("pieri expansion of S* (x) Sym^k S*") {
  // rank identity: i * dim Sym^k(C^i) = sum of the summand dimensions
  for (long long i = 1; i <= 4; ++i)
    for (long long k = 1; k <= 5; ++k) {
      auto weights = bt::pieri_svee_symk(k, i);
      if (i == 1) {
        REQUIRE(weights.size() == 1);
        CHECK(weights[0] == std::vector<long long>{k + 1});
      } else {
        REQUIRE(weights.size() == 2);
        CHECK(weights[0][0] == k);
        CHECK(weights[0][1] == 1);
        CHECK(weights[1][0] == k + 1);
      }
      Int total = 0;
      for (const auto& w : weights) total += bt::weyl_dim(w);
      CHECK(total == Int(i) * binom(i + k - 1, k));
    }
}

TEST_CASE("dominant weights concentrate in degree zero") {
  std::mt19937 rng(20260816);
  std::uniform_int_distribution<long long> entry(-4, 4);
  int trials = 0;
  while (trials < 1000) {
    long long n = 2 + static_cast<long long>(rng() % 5);  // 2..6
    long long i = 1 + static_cast<long long>(rng() % (n - 1));
    std::vector<long long> alpha(static_cast<std::size_t>(n));
    for (auto& x : alpha) x = entry(rng);
    std::sort(alpha.begin(), alpha.end(), std::greater<>());
    REQUIRE(bt::is_dominant_pair(alpha, i));
    CohomologyResult got = bt::bwb_cohomology(alpha, i, n);
    REQUIRE(!got.all_vanish);
    CHECK(got.degree == 0);
    CHECK(got.dim >= 1);
    CHECK(got.dim == bt::weyl_dim(alpha));
    ++trials;
  }
}

TEST_CASE("serre duality on projective space") {
  // H^0(O(d)) and H^n(O(-d-n-1)) are dual
  for (long long n = 1; n <= 5; ++n)
    for (long long d = 0; d <= 6; ++d) {
      CohomologyResult a = line_bundle(d, n);
      CohomologyResult b = line_bundle(-d - n - 1, n);
      REQUIRE(!a.all_vanish);
      REQUIRE(!b.all_vanish);
      CHECK(a.degree == 0);
      CHECK(b.degree == n);
      CHECK(a.dim == b.dim);
    }
}

TEST_CASE("malformed weights are rejected") {
  CHECK_THROWS(bt::is_dominant_pair({1, 2, 0}, 2));          // first block increases
  CHECK_THROWS(bt::is_dominant_pair({2, 1, 0, 1}, 2));       // second block increases
  CHECK_THROWS(bt::bwb_cohomology({1, 2, 0}, 2, 3));
  CHECK_THROWS(bt::is_dominant_pair({1, 0}, 0));             // i out of range
  CHECK_THROWS(bt::is_dominant_pair({1, 0}, 2));
  CHECK_THROWS(bt::bwb_cohomology({1, 0}, 1, 3));            // wrong length
}

TEST_CASE("dominance across the block boundary") {
  CHECK(bt::is_dominant_pair({2, 1, 1, 0}, 2));
  CHECK(!bt::is_dominant_pair({1, 1, 2, 0}, 2));  // blocks fine, concatenation not
}

TEST_CASE("twist vanishing table") {
  // spot checks; the acceptance sweep covers the full range
  for (long long k = 0; k <= 4; ++k) {
    auto v = bt::check_lemma_vanishing(4, 2, k);
    CHECK(v.tangent_twist);
    CHECK(v.sub_twist);
    CHECK(v.sym_only);
  }
  auto v51 = bt::check_lemma_vanishing(5, 1, 3);
  CHECK(v51.tangent_twist);
  CHECK(v51.sub_twist);
  CHECK(v51.sym_only);
}
