#include "dvcurve/weierstrass.hpp"

namespace dvcurve {

namespace {

// x-polynomial at one t-level of a PolyOverT.
FPoly t_level_poly(const PolyOverT& g, int i) {
  FPoly p(g.field());
  for (int j = 0; j <= g.degree(); ++j) p.set_coeff(j, g.coeff(j, i));
  return p;
}

}  // namespace

std::pair<SeriesTTx, PolyOverT> weierstrass_divide_local(const SeriesTTx& f,
                                                         const PolyOverT& g) {
  if (g.field() != f.field())
    fail(ErrorCode::FieldMismatch, "dividend and divisor over different fields");
  int d = g.degree();
  if (d < 0 || !g.is_monic())
    fail(ErrorCode::NotDistinguished, "divisor must be monic in x");
  FPoly g0 = g.mod_t();
  if (g0 != FPoly::monomial(FieldElem::one(f.field()), d))
    fail(ErrorCode::NotDistinguished, "divisor reduction mod t must be x^d");

  int nt = std::min(f.tprec(), g.tprec());
  int nx = f.xprec();
  SeriesTTx q(f.field(), nt, nx);
  PolyOverT r(f.field(), nt);
  std::vector<FPoly> r_levels(static_cast<size_t>(nt), FPoly(f.field()));

  for (int i = 0; i < nt; ++i) {
    // residual coefficient of t^i after subtracting what is already placed
    FPoly e = f.level(i);
    for (int j = 0; j < i; ++j)
      e = e - q.level(j) * t_level_poly(g, i - j);
    e = e.truncated(nx);
    // split e = q_i x^d + r_i
    FPoly qi(f.field()), ri(f.field());
    for (int j = 0; j <= e.degree(); ++j) {
      if (j < d)
        ri.set_coeff(j, e.coeff(j));
      else
        qi.set_coeff(j - d, e.coeff(j));
    }
    q.set_level(i, qi);
    r_levels[static_cast<size_t>(i)] = ri;
  }
  for (int j = 0; j < d; ++j) {
    FPoly ts(f.field());
    for (int i = 0; i < nt; ++i) ts.set_coeff(i, r_levels[static_cast<size_t>(i)].coeff(j));
    r.set_xcoeff(j, ts);
  }
  return {q, r};
}

LocalFactorization prepare_local(const SeriesTTx& f) {
  if (f.is_zero())
    fail(ErrorCode::PrecisionExhausted, "input vanishes to full precision");
  int m = f.t_valuation();
  SeriesTTx fp = f.div_tpow(m);
  int nt = fp.tprec();
  int nx = fp.xprec();

  const FPoly& f0 = fp.level(0);
  int d = f0.x_order();
  // v0 = f0 / x^d, a unit of k[[x]] within the window
  FPoly v0(f.field());
  for (int j = d; j <= f0.degree(); ++j) v0.set_coeff(j - d, f0.coeff(j));
  FPoly v0_inv_d = d > 0 ? v0.series_inverse(d) : FPoly(f.field());

  SeriesTTx u(f.field(), nt, nx);
  u.set_level(0, v0);
  std::vector<FPoly> g_levels(static_cast<size_t>(nt), FPoly(f.field()));

  for (int i = 1; i < nt; ++i) {
    FPoly w = fp.level(i);
    for (int a = 1; a < i; ++a)
      w = w - u.level(a) * g_levels[static_cast<size_t>(i - a)];
    w = w.truncated(nx);
    // solve u_i x^d + v0 g_i = w with deg g_i < d
    FPoly gi = d > 0 ? (v0_inv_d * w).truncated(d) : FPoly(f.field());
    FPoly rest = w - v0 * gi;
    FPoly ui(f.field());
    for (int j = d; j <= rest.degree(); ++j) ui.set_coeff(j - d, rest.coeff(j));
    u.set_level(i, ui.truncated(nx));
    g_levels[static_cast<size_t>(i)] = gi;
  }

  PolyOverT g(f.field(), nt);
  for (int j = 0; j < d; ++j) {
    FPoly ts(f.field());
    for (int i = 1; i < nt; ++i) ts.set_coeff(i, g_levels[static_cast<size_t>(i)].coeff(j));
    g.set_xcoeff(j, ts);
  }
  g.set_xcoeff(d, FPoly::constant(FieldElem::one(f.field())));
  return {m, g, u};
}

RestrictedFactorization prepare_restricted(const SeriesTx& a) {
  if (a.is_zero())
    fail(ErrorCode::PrecisionExhausted, "input vanishes to full precision");
  int m = a.t_valuation();
  SeriesTx ap = a.div_tpow(m);
  int nt = ap.tprec();

  const FPoly& c0 = ap.level(0);
  int d = c0.degree();
  FieldElem lc = c0.leading();
  FPoly g0 = c0.scaled(lc.inverse());  // monic reduction

  SeriesTx u(a.field(), nt);
  u.set_level(0, FPoly::constant(lc));
  std::vector<FPoly> g_levels(static_cast<size_t>(nt), FPoly(a.field()));

  for (int i = 1; i < nt; ++i) {
    FPoly w = ap.level(i);
    for (int j = 1; j < i; ++j)
      w = w - u.level(j) * g_levels[static_cast<size_t>(i - j)];
    auto [quot, rem] = w.divmod(g0);
    u.set_level(i, quot);
    g_levels[static_cast<size_t>(i)] = rem.scaled(lc.inverse());
  }

  PolyOverT g(a.field(), nt);
  for (int j = 0; j < d; ++j) {
    FPoly ts(a.field());
    ts.set_coeff(0, g0.coeff(j));
    for (int i = 1; i < nt; ++i) ts.set_coeff(i, g_levels[static_cast<size_t>(i)].coeff(j));
    g.set_xcoeff(j, ts);
  }
  g.set_xcoeff(d, FPoly::constant(FieldElem::one(a.field())));
  return {m, g, u};
}

BranchFactorization factor_branch(const SeriesLaurentT& a) {
  if (a.is_zero()) {
    // trivially a = 0 * 1
    return {true, 0, SeriesLaurentT::one(a.field(), a.tprec(), a.xprec(), a.mx())};
  }
  int m = a.t_valuation();
  return {false, m, a.div_tpow(m)};
}

NthPowerForm<SeriesTx> factor_mod_nth_power(const SeriesTx& a, int n) {
  long long ch = a.field().characteristic();
  if (ch > 0 && n % ch == 0)
    fail(ErrorCode::CharDividesN, "exponent divisible by the characteristic");
  RestrictedFactorization prep = prepare_restricted(a);
  // unit's reduction mod t is the constant lc; lift it into F and root the
  // ratio, which is congruent to 1 mod t
  FieldElem lc = prep.unit.level(0).coeff(0);
  SeriesTx ratio = detail::scale_series(prep.unit, lc.inverse());
  SeriesTx root = hensel_nth_root(ratio, n);
  SeriesTx base =
      detail::scale_series(prep.poly.to_series_tx(), lc).mul_tpow(prep.t_power);
  return {base, root, n};
}

NthPowerForm<SeriesLaurentT> factor_mod_nth_power(const SeriesLaurentT& a, int n) {
  long long ch = a.field().characteristic();
  if (ch > 0 && n % ch == 0)
    fail(ErrorCode::CharDividesN, "exponent divisible by the characteristic");
  BranchFactorization prep = factor_branch(a);
  if (prep.zero)
    fail(ErrorCode::PrecisionExhausted, "input vanishes to full precision");
  // the mod-t reduction is a Laurent polynomial within the window, hence an
  // element of F already
  SeriesLaurentT lift =
      SeriesLaurentT::from_laurent(prep.unit.level(0), prep.unit.tprec(), a.mx());
  SeriesLaurentT ratio = prep.unit * lift.invert_unit();
  SeriesLaurentT root = hensel_nth_root(ratio, n);
  SeriesLaurentT base = lift.mul_tpow(prep.t_power);
  return {base, root, n};
}

GlobalElement as_global(const NthPowerForm<SeriesTx>& f) {
  return GlobalElement(f.base, SeriesTx::one(f.base.field(), f.base.tprec()));
}

GlobalElement as_global(const RestrictedFactorization& f) {
  SeriesTx b = f.poly.to_series_tx().mul_tpow(f.t_power);
  return GlobalElement(b, SeriesTx::one(b.field(), b.tprec()));
}

}  // namespace dvcurve
