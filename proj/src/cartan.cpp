#include "dvcurve/cartan.hpp"

#include <algorithm>

namespace dvcurve {

// ------------------------------------------------------------ LaurentMatrix

LaurentMatrix::LaurentMatrix(int n, const GroundField& f, int xprec)
    : n_(n), field_(f),
      e_(static_cast<size_t>(n) * static_cast<size_t>(n), LaurentPoly(f, xprec)) {
  if (n <= 0) fail(ErrorCode::ParseError, "matrix dimension must be positive");
}

LaurentMatrix LaurentMatrix::identity(int n, const GroundField& f, int xprec) {
  LaurentMatrix m(n, f, xprec);
  for (int i = 0; i < n; ++i)
    m.set(i, i, LaurentPoly::monomial(FieldElem::one(f), 0, xprec));
  return m;
}

LaurentMatrix LaurentMatrix::operator*(const LaurentMatrix& o) const {
  if (n_ != o.n_) fail(ErrorCode::RingMismatch, "matrix dimensions differ");
  LaurentMatrix r(n_, field_, std::min(min_xprec(), o.min_xprec()));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      LaurentPoly acc = at(i, 0) * o.at(0, j);
      for (int k = 1; k < n_; ++k) acc = acc + at(i, k) * o.at(k, j);
      r.set(i, j, acc);
    }
  return r;
}

LaurentMatrix LaurentMatrix::operator-(const LaurentMatrix& o) const {
  if (n_ != o.n_) fail(ErrorCode::RingMismatch, "matrix dimensions differ");
  LaurentMatrix r(n_, field_, std::min(min_xprec(), o.min_xprec()));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r.set(i, j, at(i, j) - o.at(i, j));
  return r;
}

bool LaurentMatrix::is_zero() const {
  for (const auto& p : e_)
    if (!p.is_zero()) return false;
  return true;
}

void LaurentMatrix::col_addmul(int dst, int src, const LaurentPoly& q) {
  for (int i = 0; i < n_; ++i) set(i, dst, at(i, dst) + q * at(i, src));
}

void LaurentMatrix::row_addmul(int dst, int src, const LaurentPoly& q) {
  for (int j = 0; j < n_; ++j) set(dst, j, at(dst, j) + q * at(src, j));
}

bool LaurentMatrix::all_p_side() const {
  for (const auto& p : e_)
    if (!p.is_p_side()) return false;
  return true;
}

bool LaurentMatrix::all_u_side() const {
  for (const auto& p : e_)
    if (!p.is_u_side()) return false;
  return true;
}

int LaurentMatrix::min_xprec() const {
  int n = e_[0].xprec();
  for (const auto& p : e_) n = std::min(n, p.xprec());
  return n;
}

LaurentMatrix LaurentMatrix::inverse() const {
  LaurentMatrix a = *this;
  LaurentMatrix inv = identity(n_, field_, min_xprec());
  std::vector<bool> used(static_cast<size_t>(n_), false);
  std::vector<int> pivot_of_col(static_cast<size_t>(n_), -1);
  for (int c = 0; c < n_; ++c) {
    // pick the unused row whose entry in column c has the largest top
    // exponent (most headroom at truncation)
    int best = -1, best_top = 0;
    for (int r = 0; r < n_; ++r) {
      if (used[static_cast<size_t>(r)] || a.at(r, c).is_zero()) continue;
      int top = a.at(r, c).top_exponent();
      if (best < 0 || top > best_top) {
        best = r;
        best_top = top;
      }
    }
    if (best < 0)
      fail(ErrorCode::NotInvertible,
           "matrix not invertible at precision (column " + std::to_string(c) +
               " has no usable pivot)");
    used[static_cast<size_t>(best)] = true;
    pivot_of_col[static_cast<size_t>(c)] = best;
    LaurentPoly pinv = a.at(best, c).inverse();
    for (int j = 0; j < n_; ++j) {
      a.set(best, j, a.at(best, j) * pinv);
      inv.set(best, j, inv.at(best, j) * pinv);
    }
    for (int r = 0; r < n_; ++r) {
      if (r == best || a.at(r, c).is_zero()) continue;
      LaurentPoly f = -a.at(r, c);
      a.row_addmul(r, best, f);
      inv.row_addmul(r, best, f);
    }
  }
  // undo the row permutation: row r of the result is row pivot_of_col[r]
  LaurentMatrix out(n_, field_, inv.min_xprec());
  for (int c = 0; c < n_; ++c)
    for (int j = 0; j < n_; ++j)
      out.set(c, j, inv.at(pivot_of_col[static_cast<size_t>(c)], j));
  return out;
}

// --------------------------------------------------------------- RingMatrix

RingMatrix::RingMatrix(int n, const GroundField& f, int tprec, int xprec, int mx)
    : n_(n), field_(f), mx_(mx),
      e_(static_cast<size_t>(n) * static_cast<size_t>(n),
         SeriesLaurentT(f, tprec, xprec, mx)) {
  if (n <= 0) fail(ErrorCode::ParseError, "matrix dimension must be positive");
}

RingMatrix RingMatrix::identity(int n, const GroundField& f, int tprec, int xprec, int mx) {
  RingMatrix m(n, f, tprec, xprec, mx);
  for (int i = 0; i < n; ++i)
    m.set(i, i, SeriesLaurentT::one(f, tprec, xprec, mx));
  return m;
}

RingMatrix RingMatrix::lift(const LaurentMatrix& m, int tprec, int mx) {
  RingMatrix r(m.dim(), m.field(), tprec, m.min_xprec(), mx);
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j)
      r.set(i, j, SeriesLaurentT::from_laurent(m.at(i, j), tprec, mx));
  return r;
}

int RingMatrix::tprec() const {
  int t = e_[0].tprec();
  for (const auto& s : e_) t = std::min(t, s.tprec());
  return t;
}

void RingMatrix::set(int i, int j, const SeriesLaurentT& v) {
  if (v.field() != field_) fail(ErrorCode::FieldMismatch, "entry over wrong field");
  e_[idx(i, j)] = v;
}

RingMatrix RingMatrix::operator*(const RingMatrix& o) const {
  if (n_ != o.n_) fail(ErrorCode::RingMismatch, "matrix dimensions differ");
  RingMatrix r(n_, field_, std::min(tprec(), o.tprec()),
               std::min(min_xprec(), o.min_xprec()), std::min(mx_, o.mx_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      SeriesLaurentT acc = at(i, 0) * o.at(0, j);
      for (int k = 1; k < n_; ++k) acc = acc + at(i, k) * o.at(k, j);
      r.set(i, j, acc);
    }
  return r;
}

RingMatrix RingMatrix::operator+(const RingMatrix& o) const {
  if (n_ != o.n_) fail(ErrorCode::RingMismatch, "matrix dimensions differ");
  RingMatrix r = *this;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r.set(i, j, at(i, j) + o.at(i, j));
  return r;
}

RingMatrix RingMatrix::operator-(const RingMatrix& o) const {
  if (n_ != o.n_) fail(ErrorCode::RingMismatch, "matrix dimensions differ");
  RingMatrix r = *this;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r.set(i, j, at(i, j) - o.at(i, j));
  return r;
}

LaurentMatrix RingMatrix::mod_t() const { return t_coefficient(0); }

LaurentMatrix RingMatrix::t_coefficient(int i) const {
  LaurentMatrix m(n_, field_, min_xprec());
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c) {
      if (i < at(r, c).tprec()) m.set(r, c, at(r, c).level(i));
    }
  return m;
}

bool RingMatrix::all_p_side() const {
  for (const auto& s : e_)
    if (!s.in_p_side()) return false;
  return true;
}

bool RingMatrix::all_u_side() const {
  for (const auto& s : e_)
    if (!s.in_u_side()) return false;
  return true;
}

int RingMatrix::min_xprec() const {
  int n = e_[0].xprec();
  for (const auto& s : e_) n = std::min(n, s.xprec());
  return n;
}

int RingMatrix::t_order() const {
  int nt = tprec();
  for (int i = 0; i < nt; ++i)
    if (!t_coefficient(i).is_zero()) return i;
  return nt;
}

bool RingMatrix::equal_at_precision(const RingMatrix& o) const {
  if (n_ != o.n_) return false;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (!at(i, j).equal_at_precision(o.at(i, j))) return false;
  return true;
}

// ------------------------------------------------------------- scalar layer

std::pair<LaurentPoly, LaurentPoly> additive_split(const LaurentPoly& f) {
  return f.split_at(0);
}

std::pair<LaurentPoly, LaurentPoly> factor_mod_t_scalar(const LaurentPoly& a) {
  int j = a.top_exponent();  // PrecisionExhausted on window-zero input
  FieldElem lc = a.coeff(j);
  LaurentPoly c = LaurentPoly::monomial(lc, j, a.xprec());
  LaurentPoly b = a.shifted(-j).scaled(lc.inverse());
  return {b, c};
}

// ------------------------------------------------------- mod-t factorization

namespace {

struct BirkhoffReduction {
  LaurentMatrix b_unit;     // columns exps <= 0, leading vectors independent
  std::vector<int> dexp;    // extracted diagonal exponents
  LaurentMatrix lead;       // invertible over k: b_unit = lead mod x^-1
  LaurentMatrix v;          // accumulated column operations, in GL_n(k[x])
  LaurentMatrix v_inv;
};

// Solve sum_c mu_c * lead_c = 0 over k; empty result means independent.
std::vector<FieldElem> leading_dependency(const GroundField& k,
                                          const std::vector<std::vector<FieldElem>>& lead) {
  int n = static_cast<int>(lead.size());
  // columns of the elimination matrix are the leading vectors
  std::vector<std::vector<FieldElem>> m(static_cast<size_t>(n),
                                        std::vector<FieldElem>(static_cast<size_t>(n),
                                                               FieldElem::zero(k)));
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < n; ++r) m[static_cast<size_t>(r)][static_cast<size_t>(c)] = lead[static_cast<size_t>(c)][static_cast<size_t>(r)];
  // row echelon with column pivoting, remembering the combination
  std::vector<int> pivot_col(static_cast<size_t>(n), -1);
  std::vector<std::vector<FieldElem>> comb(static_cast<size_t>(n),
                                           std::vector<FieldElem>(static_cast<size_t>(n),
                                                                  FieldElem::zero(k)));
  for (int c = 0; c < n; ++c) comb[static_cast<size_t>(c)][static_cast<size_t>(c)] = FieldElem::one(k);
  // Gaussian elimination on columns: reduce column c against previous pivots
  std::vector<int> pivot_row_of(static_cast<size_t>(n), -1);
  for (int c = 0; c < n; ++c) {
    // eliminate using established pivots
    for (int pc = 0; pc < c; ++pc) {
      int pr = pivot_row_of[static_cast<size_t>(pc)];
      if (pr < 0) continue;
      FieldElem f = m[static_cast<size_t>(pr)][static_cast<size_t>(c)];
      if (f.is_zero()) continue;
      for (int r = 0; r < n; ++r)
        m[static_cast<size_t>(r)][static_cast<size_t>(c)] =
            m[static_cast<size_t>(r)][static_cast<size_t>(c)] - f * m[static_cast<size_t>(r)][static_cast<size_t>(pc)];
      for (int r = 0; r < n; ++r)
        comb[static_cast<size_t>(r)][static_cast<size_t>(c)] =
            comb[static_cast<size_t>(r)][static_cast<size_t>(c)] - f * comb[static_cast<size_t>(r)][static_cast<size_t>(pc)];
    }
    // find a pivot row
    int pr = -1;
    for (int r = 0; r < n; ++r) {
      if (!m[static_cast<size_t>(r)][static_cast<size_t>(c)].is_zero()) {
        pr = r;
        break;
      }
    }
    if (pr < 0) {
      // column c reduced to zero: dependency found
      std::vector<FieldElem> mu(static_cast<size_t>(n), FieldElem::zero(k));
      for (int r = 0; r < n; ++r) mu[static_cast<size_t>(r)] = comb[static_cast<size_t>(r)][static_cast<size_t>(c)];
      return mu;
    }
    // normalize pivot to 1
    FieldElem piv_inv = m[static_cast<size_t>(pr)][static_cast<size_t>(c)].inverse();
    for (int r = 0; r < n; ++r)
      m[static_cast<size_t>(r)][static_cast<size_t>(c)] = m[static_cast<size_t>(r)][static_cast<size_t>(c)] * piv_inv;
    for (int r = 0; r < n; ++r)
      comb[static_cast<size_t>(r)][static_cast<size_t>(c)] = comb[static_cast<size_t>(r)][static_cast<size_t>(c)] * piv_inv;
    pivot_row_of[static_cast<size_t>(c)] = pr;
  }
  return {};
}

BirkhoffReduction birkhoff_reduce(const LaurentMatrix& a) {
  const GroundField& k = a.field();
  int n = a.dim();
  LaurentMatrix m = a;
  int floor0 = m.min_xprec();
  LaurentMatrix v = LaurentMatrix::identity(n, k, floor0);
  LaurentMatrix v_inv = v;

  auto column_top = [&](int c) -> int {
    int top = 0;
    bool any = false;
    for (int r = 0; r < n; ++r) {
      if (m.at(r, c).is_zero()) continue;
      int t = m.at(r, c).top_exponent();
      if (!any || t > top) top = t;
      any = true;
    }
    if (!any)
      fail(ErrorCode::WindowTooSmall,
           "column " + std::to_string(c) +
               " vanished within the x-window during reduction");
    return top;
  };

  while (true) {
    std::vector<int> d(static_cast<size_t>(n));
    std::vector<std::vector<FieldElem>> lead(
        static_cast<size_t>(n),
        std::vector<FieldElem>(static_cast<size_t>(n), FieldElem::zero(k)));
    for (int c = 0; c < n; ++c) {
      d[static_cast<size_t>(c)] = column_top(c);
      for (int r = 0; r < n; ++r)
        lead[static_cast<size_t>(c)][static_cast<size_t>(r)] =
            m.at(r, c).coeff(d[static_cast<size_t>(c)]);
    }
    std::vector<FieldElem> mu = leading_dependency(k, lead);
    if (mu.empty()) {
      // leading vectors independent: extract the diagonal
      LaurentMatrix b_unit(n, k, m.min_xprec());
      LaurentMatrix lmat(n, k, m.min_xprec());
      for (int c = 0; c < n; ++c)
        for (int r = 0; r < n; ++r) {
          b_unit.set(r, c, m.at(r, c).shifted(-d[static_cast<size_t>(c)]));
          if (!lead[static_cast<size_t>(c)][static_cast<size_t>(r)].is_zero())
            lmat.set(r, c,
                     LaurentPoly::monomial(lead[static_cast<size_t>(c)][static_cast<size_t>(r)],
                                           0, m.min_xprec()));
        }
      return {b_unit, d, lmat, v, v_inv};
    }
    // pick the column with the largest degree among the dependency support
    int j = -1;
    for (int c = 0; c < n; ++c) {
      if (mu[static_cast<size_t>(c)].is_zero()) continue;
      if (j < 0 || d[static_cast<size_t>(c)] > d[static_cast<size_t>(j)] ||
          (d[static_cast<size_t>(c)] == d[static_cast<size_t>(j)] && c > j))
        j = c;
    }
    FieldElem mj_inv = mu[static_cast<size_t>(j)].inverse();
    for (int c = 0; c < n; ++c) {
      if (c == j || mu[static_cast<size_t>(c)].is_zero()) continue;
      FieldElem coef = mu[static_cast<size_t>(c)] * mj_inv;
      int shift = d[static_cast<size_t>(j)] - d[static_cast<size_t>(c)];  // >= 0
      LaurentPoly q = LaurentPoly::monomial(coef, shift, m.min_xprec());
      m.col_addmul(j, c, q);
      v.col_addmul(j, c, q);
      v_inv.row_addmul(c, j, -q);
    }
    // the leading term of column j cancels by construction; progress is
    // monotone and bounded below by the window, enforced in column_top
  }
}

}  // namespace

ModTFactorization factor_mod_t_matrix(const LaurentMatrix& a) {
  a.inverse();  // certify invertibility at precision (NotInvertible if not)
  BirkhoffReduction red = birkhoff_reduce(a);
  int n = a.dim();
  const GroundField& k = a.field();
  // left = b_unit * lead^-1 (= I mod x^-1); right = lead * D * v_inv
  LaurentMatrix lead_inv = red.lead.inverse();
  LaurentMatrix left = red.b_unit * lead_inv;
  LaurentMatrix dv(n, k, red.v_inv.min_xprec());
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      dv.set(r, c, red.v_inv.at(r, c).shifted(red.dexp[static_cast<size_t>(r)]));
  LaurentMatrix right = red.lead * dv;
  return {left, right};
}

namespace {

RingMatrix embed_at_level(const LaurentMatrix& m, int level, int tprec, int mx,
                          bool plus_identity) {
  int n = m.dim();
  RingMatrix r = plus_identity
                     ? RingMatrix::identity(n, m.field(), tprec, m.min_xprec(), mx)
                     : RingMatrix(n, m.field(), tprec, m.min_xprec(), mx);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      SeriesLaurentT e = r.at(i, j);
      e.set_level(level, e.level(level) + m.at(i, j));
      r.set(i, j, e);
    }
  return r;
}

}  // namespace

FactorizationPair cartan_factor(const RingMatrix& a, FactorDirection dir) {
  int n = a.dim();
  int nt = a.tprec();
  int mx = a.mx();
  const GroundField& k = a.field();
  int window_before = a.min_xprec();

  // certify invertibility: in a t-adically complete ring a matrix is
  // invertible iff it is invertible mod t
  LaurentMatrix abar = a.mod_t();
  abar.inverse();  // throws NotInvertible when singular at precision

  // mod-t seed: abar = b_unit * diag(x^d) * v^-1 with v in GL_n(k[x]);
  // negative diagonal powers go left, nonnegative ones right, keeping the
  // sides entrywise pure
  BirkhoffReduction red = birkhoff_reduce(abar);
  LaurentMatrix b0bar = red.b_unit;
  for (int r = 0; r < n; ++r) {
    int d = red.dexp[static_cast<size_t>(r)];
    if (d < 0)
      for (int i = 0; i < n; ++i) b0bar.set(i, r, b0bar.at(i, r).shifted(d));
  }
  LaurentMatrix c0bar = red.v_inv;
  for (int r = 0; r < n; ++r) {
    int d = red.dexp[static_cast<size_t>(r)];
    if (d > 0)
      for (int j = 0; j < n; ++j) c0bar.set(r, j, c0bar.at(r, j).shifted(d));
  }

  RingMatrix left = RingMatrix::lift(b0bar, nt, mx);
  RingMatrix right = RingMatrix::lift(c0bar, nt, mx);
  // mod-t inverses of the seeds; the updates never change the factors mod t
  LaurentMatrix l0inv = b0bar.inverse();
  LaurentMatrix r0inv = c0bar.inverse();

  const int cut = dir == FactorDirection::PTimesU ? 0 : -1;
  std::vector<int> step_orders;

  for (int i = 1; i < nt; ++i) {
    // drive the defect of the recomposition itself to higher t-order
    RingMatrix defect = a - left * right;
    int ord = defect.t_order();
    if (ord < i)
      fail(ErrorCode::Internal,
           "defect order " + std::to_string(ord) + " below level " + std::to_string(i));
    step_orders.push_back(ord);
    if (ord >= nt) continue;  // already exact to precision
    LaurentMatrix delta = defect.t_coefficient(ord);
    LaurentMatrix m = l0inv * delta * r0inv;
    LaurentMatrix mp(n, k, m.min_xprec());
    LaurentMatrix mu(n, k, m.min_xprec());
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        auto [p, u] = m.at(r, c).split_at(cut);
        mp.set(r, c, p);
        mu.set(r, c, u);
      }
    left = left * embed_at_level(mp, ord, nt, mx, true);
    right = embed_at_level(mu, ord, nt, mx, true) * right;
  }

  RingMatrix final_defect = a - left * right;
  step_orders.push_back(final_defect.t_order());

  int consumed = window_before - std::min(left.min_xprec(), right.min_xprec());
  return {left, right, dir, step_orders, consumed};
}

PatchSolution solve_patching_problem(const RingMatrix& a) {
  FactorizationPair pair = cartan_factor(a, FactorDirection::PTimesU);
  // recompute the certificate from the returned factors alone
  LaurentMatrix lbar = pair.left.mod_t();
  LaurentMatrix rbar = pair.right.mod_t();
  RingMatrix left_inv = RingMatrix::lift(lbar.inverse(), a.tprec(), a.mx());
  RingMatrix right_inv = RingMatrix::lift(rbar.inverse(), a.tprec(), a.mx());
  // t-adic Newton lift of the mod-t inverses
  RingMatrix ident = RingMatrix::identity(a.dim(), a.field(), a.tprec(),
                                          a.min_xprec(), a.mx());
  for (int it = 1; it < a.tprec(); it *= 2) {
    left_inv = left_inv * (ident + ident - pair.left * left_inv);
    right_inv = right_inv * (ident + ident - pair.right * right_inv);
  }
  RingMatrix resid = left_inv * a * right_inv - ident;
  int ord = resid.t_order();
  PatchCertificate cert{ord >= resid.tprec(), ord, pair.step_orders,
                        pair.consumed_window};
  return {pair, cert};
}

}  // namespace dvcurve
