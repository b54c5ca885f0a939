#include "wallcross/adhm.hpp"

#include <stdexcept>
#include <string>

namespace wallcross::adhm {

namespace {

void require_shape(const Matrix& m, long long rows, long long cols, const char* name) {
  if (m.rows() != rows || m.cols() != cols)
    throw std::invalid_argument(std::string(name) + " must be " + std::to_string(rows) + "x" +
                                std::to_string(cols) + ", got " + std::to_string(m.rows()) + "x" +
                                std::to_string(m.cols()));
}

}  // namespace

ADHMDataP2::ADHMDataP2(long long n_, long long r_, Matrix B1_, Matrix B2_, Matrix i_, Matrix j_)
    : n(n_), r(r_), B1(std::move(B1_)), B2(std::move(B2_)), i_map(std::move(i_)), j_map(std::move(j_)) {
  if (n < 0 || r < 0) throw std::invalid_argument("negative dimension");
  require_shape(B1, n, n, "B1");
  require_shape(B2, n, n, "B2");
  require_shape(i_map, n, r, "i");
  require_shape(j_map, r, n, "j");
}

Matrix relation_residual_p2(const ADHMDataP2& x) {
  return x.B1 * x.B2 - x.B2 * x.B1 + x.i_map * x.j_map;
}

bool check_relation_p2(const ADHMDataP2& x) { return relation_residual_p2(x).is_zero(); }

bool is_stable_p2(const ADHMDataP2& x) {
  qlinalg::SubspaceBasis span(x.n);
  std::vector<std::vector<Rational>> frontier;
  for (long long c = 0; c < x.r; ++c) {
    std::vector<Rational> col(static_cast<std::size_t>(x.n));
    for (long long a = 0; a < x.n; ++a) col[static_cast<std::size_t>(a)] = x.i_map.at(a, c);
    if (span.insert(col)) frontier.push_back(span.rows().back());
  }
  while (!frontier.empty() && span.dim() < x.n) {
    std::vector<std::vector<Rational>> next;
    for (const auto& v : frontier) {
      for (const Matrix* B : {&x.B1, &x.B2}) {
        std::vector<Rational> image(static_cast<std::size_t>(x.n), Rational(0));
        for (long long a = 0; a < x.n; ++a)
          for (long long b = 0; b < x.n; ++b)
            image[static_cast<std::size_t>(a)] += B->at(a, b) * v[static_cast<std::size_t>(b)];
        if (span.insert(image)) next.push_back(span.rows().back());
      }
    }
    frontier = std::move(next);
  }
  return span.dim() == x.n;
}

BlowupQuiverRep::BlowupQuiverRep(long long d0_, long long d1_, long long dinf_, Matrix B1_,
                                 Matrix B2_, Matrix d_, Matrix i_, Matrix j_)
    : d0(d0_), d1(d1_), dinf(dinf_), B1(std::move(B1_)), B2(std::move(B2_)), d(std::move(d_)),
      i_map(std::move(i_)), j_map(std::move(j_)) {
  if (d0 < 0 || d1 < 0 || dinf < 0) throw std::invalid_argument("negative dimension");
  require_shape(B1, d0, d1, "B1");
  require_shape(B2, d0, d1, "B2");
  require_shape(d, d1, d0, "d");
  require_shape(i_map, d0, dinf, "i");
  require_shape(j_map, dinf, d1, "j");
}

Matrix relation_residual_blowup(const BlowupQuiverRep& rep) {
  return rep.B1 * rep.d * rep.B2 - rep.B2 * rep.d * rep.B1 + rep.i_map * rep.j_map;
}

bool check_relation_blowup(const BlowupQuiverRep& rep) {
  return relation_residual_blowup(rep).is_zero();
}

ADHMDataP2 collapse_to_p2(const BlowupQuiverRep& rep) {
  if (rep.d0 != rep.d1)
    throw std::domain_error("collapse needs d0 == d1, got (" + std::to_string(rep.d0) + ", " +
                            std::to_string(rep.d1) + ")");
  return ADHMDataP2(rep.d1, rep.dinf, rep.d * rep.B1, rep.d * rep.B2, rep.d * rep.i_map, rep.j_map);
}

BlowupQuiverRep ocm_rep(long long m) {
  if (m < 0) throw std::invalid_argument("need m >= 0");
  Matrix B1(m, m + 1), B2(m, m + 1);
  for (long long a = 0; a < m; ++a) {
    B1.at(a, a) = 1;
    B2.at(a, a + 1) = 1;
  }
  return BlowupQuiverRep(m, m + 1, 0, std::move(B1), std::move(B2), Matrix(m + 1, m), Matrix(m, 0),
                         Matrix(0, m + 1));
}

namespace {

Matrix block_diag(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (long long r = 0; r < a.rows(); ++r)
    for (long long c = 0; c < a.cols(); ++c) out.at(r, c) = a.at(r, c);
  for (long long r = 0; r < b.rows(); ++r)
    for (long long c = 0; c < b.cols(); ++c) out.at(a.rows() + r, a.cols() + c) = b.at(r, c);
  return out;
}

}  // namespace

BlowupQuiverRep direct_sum(const BlowupQuiverRep& a, const BlowupQuiverRep& b) {
  return BlowupQuiverRep(a.d0 + b.d0, a.d1 + b.d1, a.dinf + b.dinf, block_diag(a.B1, b.B1),
                         block_diag(a.B2, b.B2), block_diag(a.d, b.d),
                         block_diag(a.i_map, b.i_map), block_diag(a.j_map, b.j_map));
}

namespace {

// One unknown block phi_v : V_v(src) -> V_v(dst) per vertex; a "dropped" block
// (framed phiinf) contributes zero columns instead.
struct Unknowns {
  long long off0, off1, offinf, total;
  bool has_inf;
};

// Adds the equations phi_t . A_src - A_dst . phi_s = 0 for one arrow s -> t.
void add_arrow(std::vector<std::vector<Rational>>& eqs, const Unknowns& u, const Matrix& a_src,
               const Matrix& a_dst, long long off_s, long long off_t, long long rows_s_src,
               long long rows_t_dst, bool s_present, bool t_present) {
  // Equation indices: a < rows of A_dst's target on dst side, b < cols of
  // A_src's source on src side.
  long long eq_rows = rows_t_dst;   // dim V_t(dst)
  long long eq_cols = rows_s_src;   // dim V_s(src)
  for (long long a = 0; a < eq_rows; ++a)
    for (long long b = 0; b < eq_cols; ++b) {
      std::vector<Rational> row(static_cast<std::size_t>(u.total), Rational(0));
      bool nontrivial = false;
      if (t_present) {
        // sum_c phi_t[a][c] * A_src[c][b]; phi_t has dim V_t(dst) x dim V_t(src) entries.
        for (long long c = 0; c < a_src.rows(); ++c) {
          const Rational& x = a_src.at(c, b);
          if (x == 0) continue;
          row[static_cast<std::size_t>(off_t + a * a_src.rows() + c)] += x;
          nontrivial = true;
        }
      }
      if (s_present) {
        // -sum_c A_dst[a][c] * phi_s[c][b]; phi_s has dim V_s(dst) x dim V_s(src) entries.
        for (long long c = 0; c < a_dst.cols(); ++c) {
          const Rational& x = a_dst.at(a, c);
          if (x == 0) continue;
          row[static_cast<std::size_t>(off_s + c * eq_cols + b)] -= x;
          nontrivial = true;
        }
      }
      if (nontrivial) eqs.push_back(std::move(row));
    }
}

}  // namespace

long long hom_dim(const BlowupQuiverRep& src, const BlowupQuiverRep& dst, bool framed) {
  Unknowns u;
  u.has_inf = !framed;
  u.off0 = 0;
  u.off1 = dst.d0 * src.d0;
  u.offinf = u.off1 + dst.d1 * src.d1;
  u.total = u.offinf + (u.has_inf ? dst.dinf * src.dinf : 0);
  if (u.total == 0) return 0;

  std::vector<std::vector<Rational>> eqs;
  // B1, B2 : 1 -> 0. phi has blocks indexed phi_v[a][c] at off_v + a*dim_v(src) + c.
  add_arrow(eqs, u, src.B1, dst.B1, u.off1, u.off0, src.d1, dst.d0, true, true);
  add_arrow(eqs, u, src.B2, dst.B2, u.off1, u.off0, src.d1, dst.d0, true, true);
  // d : 0 -> 1.
  add_arrow(eqs, u, src.d, dst.d, u.off0, u.off1, src.d0, dst.d1, true, true);
  // j : 1 -> inf.
  add_arrow(eqs, u, src.j_map, dst.j_map, u.off1, u.offinf, src.d1, dst.dinf, true, u.has_inf);
  // i : inf -> 0.
  add_arrow(eqs, u, src.i_map, dst.i_map, u.offinf, u.off0, src.dinf, dst.d0, u.has_inf, true);

  if (eqs.empty()) return u.total;
  Matrix system(static_cast<long long>(eqs.size()), u.total);
  for (long long r = 0; r < system.rows(); ++r)
    for (long long c = 0; c < u.total; ++c)
      system.at(r, c) = eqs[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  return u.total - system.rank();
}

long long bn_index(const BlowupQuiverRep& rep, long long m) {
  return hom_dim(ocm_rep(m), rep, true);
}

StabilityPair m_stability_test(const BlowupQuiverRep& rep, long long m) {
  if (m < 1)
    throw std::invalid_argument(
        "m-stability test needs m >= 1; at m = 0 only the first condition survives, "
        "use zero_stability_partial");
  StabilityPair out;
  out.cond1 = hom_dim(rep, ocm_rep(m), true) == 0;
  out.cond2 = hom_dim(ocm_rep(m - 1), rep, true) == 0;
  return out;
}

bool zero_stability_partial(const BlowupQuiverRep& rep) {
  return hom_dim(rep, ocm_rep(0), true) == 0;
}

}  // namespace wallcross::adhm
