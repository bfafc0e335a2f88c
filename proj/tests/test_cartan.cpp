#include <doctest.h>

#include "dvcurve/cartan.hpp"
#include "test_util.hpp"

using namespace dvcurve;
using testutil::Rng;

namespace {
const GroundField kQ = GroundField::rationals();
const GroundField kF7 = GroundField::prime_field(7);

LaurentPoly mono(const GroundField& f, long long c, int e, int xprec) {
  return LaurentPoly::monomial(FieldElem::from_integer(f, c), e, xprec);
}

void check_pair(const RingMatrix& a, const FactorizationPair& pair) {
  CHECK((pair.left * pair.right).equal_at_precision(a));
  CHECK(pair.left.all_p_side());
  CHECK(pair.right.all_u_side());
  for (size_t i = 0; i < pair.step_orders.size(); ++i)
    CHECK(pair.step_orders[i] >= static_cast<int>(i) + 1);
  CHECK(pair.step_orders.back() >= a.tprec());
  // both sides stay invertible at precision
  CHECK_NOTHROW(pair.left.mod_t().inverse());
  CHECK_NOTHROW(pair.right.mod_t().inverse());
}
}  // namespace

TEST_CASE("additive split routes constants left and x k[x] right") {
  LaurentPoly five = mono(kQ, 5, 0, 8);
  auto [p1, u1] = additive_split(five);
  CHECK(p1 == five);
  CHECK(u1.is_zero());

  LaurentPoly f(kQ, 8);
  f.set_coeff(2, FieldElem::one(kQ));
  f.set_coeff(0, FieldElem::one(kQ));
  f.set_coeff(-1, FieldElem::one(kQ));
  auto [p2, u2] = additive_split(f);
  CHECK(p2.top_exponent() == 0);
  CHECK(p2.low_exponent() == -1);
  CHECK(u2.top_exponent() == 2);
  CHECK(u2.low_exponent() == 2);

  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    LaurentPoly g = testutil::random_laurent(rng, kF7, 8, -4, 4);
    auto [p, u] = additive_split(g);
    CHECK((p + u) == g);
    CHECK(p.is_p_side());
    if (!u.is_zero()) CHECK(u.low_exponent() >= 1);
    // direct-sum projection is idempotent
    auto [pp, pu] = additive_split(p);
    CHECK(pp == p);
    CHECK(pu.is_zero());
    auto [up, uu] = additive_split(u);
    CHECK(up.is_zero());
    CHECK(uu == u);
  }
}

TEST_CASE("mod-t scalar factorization") {
  // x^3 -> (1, x^3)
  auto [b1, c1] = factor_mod_t_scalar(mono(kQ, 1, 3, 8));
  CHECK(b1 == mono(kQ, 1, 0, 8));
  CHECK(c1 == mono(kQ, 1, 3, 8));

  // 2x + 3 + x^-1 over Q: c = 2x, b = 1 + (3/2) x^-1 + (1/2) x^-2
  LaurentPoly a(kQ, 8);
  a.set_coeff(1, FieldElem::from_integer(kQ, 2));
  a.set_coeff(0, FieldElem::from_integer(kQ, 3));
  a.set_coeff(-1, FieldElem::one(kQ));
  auto [b2, c2] = factor_mod_t_scalar(a);
  CHECK(c2 == mono(kQ, 2, 1, 8));
  CHECK(b2.coeff(0).is_one());
  CHECK(b2.coeff(-1).str() == "3/2");
  CHECK(b2.coeff(-2).str() == "1/2");
  CHECK((b2 * c2) == a);

  // pure negative monomial is accepted as a k[x, x^-1] unit on the right
  auto [b3, c3] = factor_mod_t_scalar(mono(kQ, 1, -2, 8));
  CHECK(b3.coeff(0).is_one());
  CHECK(c3 == mono(kQ, 1, -2, 8));

  CHECK_THROWS_AS(factor_mod_t_scalar(LaurentPoly::zero(kQ, 8)), Error);
}

TEST_CASE("mod-t matrix factorization: pinned cases") {
  LaurentMatrix eye = LaurentMatrix::identity(2, kQ, 10);
  ModTFactorization f1 = factor_mod_t_matrix(eye);
  CHECK((f1.left * f1.right - eye).is_zero());
  CHECK(f1.left.all_p_side());

  // diag(x, x^-1): everything absorbed into the right factor
  LaurentMatrix d(2, kQ, 10);
  d.set(0, 0, mono(kQ, 1, 1, 10));
  d.set(1, 1, mono(kQ, 1, -1, 10));
  ModTFactorization f2 = factor_mod_t_matrix(d);
  CHECK((f2.left - LaurentMatrix::identity(2, kQ, f2.left.min_xprec())).is_zero());
  CHECK((f2.left * f2.right - d).is_zero());
}

TEST_CASE("mod-t matrix factorization: random recomposition and sides") {
  Rng rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    LaurentMatrix a(2, kF7, 24);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        a.set(i, j, testutil::random_laurent(rng, kF7, 24, -3, 3));
    bool invertible = true;
    try {
      a.inverse();
    } catch (const Error&) {
      invertible = false;
    }
    if (!invertible) {
      CHECK_THROWS_AS(factor_mod_t_matrix(a), Error);
      continue;
    }
    ModTFactorization f = factor_mod_t_matrix(a);
    LaurentMatrix resid = f.left * f.right - a;
    // compare down to the surviving window
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        const LaurentPoly& e = resid.at(i, j);
        if (!e.is_zero()) CHECK(e.top_exponent() < -e.xprec());
      }
    CHECK(f.left.all_p_side());
    // right factor entries are Laurent polynomials by construction; left is
    // normalized to the identity mod x^-1
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        FieldElem c0 = f.left.at(i, j).coeff(0);
        CHECK(c0 == (i == j ? FieldElem::one(kF7) : FieldElem::zero(kF7)));
      }
  }
}

TEST_CASE("mod-t factorization rejects singular input") {
  LaurentMatrix a(2, kQ, 8);
  a.set(0, 0, mono(kQ, 1, 1, 8));
  a.set(0, 1, mono(kQ, 2, 0, 8));
  a.set(1, 0, mono(kQ, 3, 1, 8));
  a.set(1, 1, mono(kQ, 6, 0, 8));  // rows proportional
  try {
    factor_mod_t_matrix(a);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotInvertible);
  }
}

TEST_CASE("cartan factorization: identity and t-perturbations") {
  RingMatrix eye = RingMatrix::identity(2, kQ, 6, 20, 8);
  for (FactorDirection dir :
       {FactorDirection::PTimesU, FactorDirection::PprimeTimesUprime}) {
    FactorizationPair pair = cartan_factor(eye, dir);
    check_pair(eye, pair);
  }

  Rng rng(29);
  for (int trial = 0; trial < 10; ++trial) {
    // A = I + t M with polynomial-entry M
    RingMatrix a = RingMatrix::identity(2, kQ, 6, 20, 8);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        SeriesLaurentT e = a.at(i, j);
        for (int lvl = 1; lvl < 6; ++lvl)
          e.set_level(lvl, LaurentPoly::from_poly(testutil::random_poly(rng, kQ, 3), 20));
        a.set(i, j, e);
      }
    for (FactorDirection dir :
         {FactorDirection::PTimesU, FactorDirection::PprimeTimesUprime})
      check_pair(a, cartan_factor(a, dir));
  }
}

TEST_CASE("cartan factorization: diag(x + t, 1) splits across the sides") {
  RingMatrix a(2, kQ, 6, 24, 8);
  SeriesLaurentT xt(kQ, 6, 24, 8);
  xt.set_level(0, mono(kQ, 1, 1, 24));
  xt.set_level(1, mono(kQ, 1, 0, 24));
  a.set(0, 0, xt);
  a.set(1, 1, SeriesLaurentT::one(kQ, 6, 24, 8));
  FactorizationPair pair = cartan_factor(a, FactorDirection::PTimesU);
  check_pair(a, pair);
}

TEST_CASE("cartan factorization handles negative-exponent diagonal content") {
  RingMatrix a(2, kQ, 5, 24, 8);
  SeriesLaurentT xinv(kQ, 5, 24, 8);
  xinv.set_level(0, mono(kQ, 1, -1, 24));
  xinv.set_level(1, mono(kQ, 1, 1, 24));  // x^-1 + t x
  a.set(0, 0, xinv);
  a.set(1, 1, SeriesLaurentT::one(kQ, 5, 24, 8));
  for (FactorDirection dir :
       {FactorDirection::PTimesU, FactorDirection::PprimeTimesUprime})
    check_pair(a, cartan_factor(a, dir));
}

TEST_CASE("direction flag routes the level constants") {
  // scalar with constant content at level 1
  RingMatrix a(1, kQ, 4, 16, 8);
  SeriesLaurentT s = SeriesLaurentT::one(kQ, 4, 16, 8);
  LaurentPoly lvl(kQ, 16);
  lvl.set_coeff(0, FieldElem::from_integer(kQ, 5));
  lvl.set_coeff(1, FieldElem::from_integer(kQ, 2));
  s.set_level(1, lvl);
  a.set(0, 0, s);

  FactorizationPair pu = cartan_factor(a, FactorDirection::PTimesU);
  FactorizationPair up = cartan_factor(a, FactorDirection::PprimeTimesUprime);
  check_pair(a, pu);
  check_pair(a, up);
  // P x U: the t-level constant 5 lands in the left factor
  CHECK(pu.left.at(0, 0).level(1).coeff(0) == FieldElem::from_integer(kQ, 5));
  CHECK(up.left.at(0, 0).level(1).coeff(0).is_zero());
  // reversed direction: it lands in the right factor
  CHECK(up.right.at(0, 0).level(1).coeff(0) == FieldElem::from_integer(kQ, 5));
}

TEST_CASE("scalar cartan agrees with the scalar mod-t pipeline") {
  Rng rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    SeriesLaurentT s = testutil::random_laurentt(rng, kF7, 5, 24, 8, -2, 2);
    if (!s.is_unit()) continue;
    RingMatrix a(1, kF7, 5, 24, 8);
    a.set(0, 0, s);
    FactorizationPair pair = cartan_factor(a, FactorDirection::PTimesU);
    check_pair(a, pair);

    // independent scalar route: mod-t split + successive approximation
    auto [b0, c0] = factor_mod_t_scalar(s.level(0));
    SeriesLaurentT left = SeriesLaurentT::from_laurent(b0, 5, 8);
    SeriesLaurentT right = SeriesLaurentT::from_laurent(c0, 5, 8);
    for (int lvl = 1; lvl < 5; ++lvl) {
      SeriesLaurentT resid =
          left.invert_unit() * s * right.invert_unit() -
          SeriesLaurentT::one(kF7, 5, left.xprec(), 8);
      bool done = true;
      for (int i = 0; i < 5; ++i)
        if (!resid.level(i).is_zero()) {
          done = false;
          break;
        }
      if (done) break;
      int ord = resid.t_valuation();
      auto [dp, du] = additive_split(resid.level(ord));
      SeriesLaurentT upd_l = SeriesLaurentT::one(kF7, 5, dp.xprec(), 8);
      upd_l.set_level(ord, dp);
      SeriesLaurentT upd_r = SeriesLaurentT::one(kF7, 5, du.xprec(), 8);
      upd_r.set_level(ord, du);
      left = left * upd_l;
      right = upd_r * right;
    }
    CHECK((left * right).equal_at_precision(s));
    // the two routes recompose to the same element; their factors differ by
    // the documented unit normalization
    CHECK((pair.left.at(0, 0) * pair.right.at(0, 0)).equal_at_precision(left * right));
  }
}

TEST_CASE("patching certificate: adjusted bases agree to full precision") {
  RingMatrix eye = RingMatrix::identity(3, kQ, 5, 20, 8);
  PatchSolution triv = solve_patching_problem(eye);
  CHECK(triv.certificate.identity_ok);
  CHECK(triv.certificate.residual_t_order >= 5);

  Rng rng(97);
  for (int trial = 0; trial < 6; ++trial) {
    RingMatrix a = RingMatrix::identity(3, kQ, 5, 24, 8);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        SeriesLaurentT e = a.at(i, j);
        for (int lvl = 1; lvl < 5; ++lvl)
          e.set_level(lvl, testutil::random_laurent(rng, kQ, 24, -2, 2));
        a.set(i, j, e);
      }
    PatchSolution sol = solve_patching_problem(a);
    CHECK(sol.certificate.identity_ok);
    CHECK(sol.certificate.residual_t_order >= a.tprec());
    check_pair(a, sol.factors);
  }

  // n = 1: a unit splits into a P-side times a U-side unit
  SeriesLaurentT u = SeriesLaurentT::one(kQ, 5, 16, 8);
  LaurentPoly l1(kQ, 16);
  l1.set_coeff(-1, FieldElem::one(kQ));
  l1.set_coeff(2, FieldElem::one(kQ));
  u.set_level(1, l1);
  RingMatrix m1(1, kQ, 5, 16, 8);
  m1.set(0, 0, u);
  PatchSolution sol1 = solve_patching_problem(m1);
  CHECK(sol1.certificate.identity_ok);
  CHECK(sol1.factors.left.at(0, 0).in_p_side());
  CHECK(sol1.factors.right.at(0, 0).in_u_side());
}

TEST_CASE("starved windows fail honestly, never silently") {
  // with tiny windows and truncation-born entries the factorization must
  // either recompose at the claimed precision or throw a precision-class
  // error; a wrong result is never acceptable
  Rng rng(99);
  for (int nx : {3, 4, 6}) {
    for (int trial = 0; trial < 40; ++trial) {
      RingMatrix a(2, kF7, 5, nx, 4);
      bool usable = true;
      try {
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j) {
            SeriesLaurentT e = testutil::random_laurentt(rng, kF7, 5, nx, 4, -2, 2);
            SeriesLaurentT u = SeriesLaurentT::one(kF7, 5, nx, 4);
            LaurentPoly lvl(kF7, nx);
            lvl.set_coeff(0, FieldElem::one(kF7));
            lvl.set_coeff(-1, FieldElem::from_integer(kF7, 3));
            u.set_level(0, lvl);
            a.set(i, j, e * u.invert_unit());
          }
        a.mod_t().inverse();
      } catch (const Error&) {
        usable = false;
      }
      if (!usable) continue;
      try {
        FactorizationPair p = cartan_factor(a, FactorDirection::PTimesU);
        CHECK((p.left * p.right).equal_at_precision(a));
        CHECK(p.left.all_p_side());
        CHECK(p.right.all_u_side());
      } catch (const Error& e) {
        bool precision_class = e.code() == ErrorCode::WindowTooSmall ||
                               e.code() == ErrorCode::PrecisionExhausted ||
                               e.code() == ErrorCode::NotInvertible ||
                               e.code() == ErrorCode::NotAUnit;
        CHECK(precision_class);
      }
    }
  }
}

TEST_CASE("cartan factorization rejects mod-t singular matrices") {
  RingMatrix a(2, kQ, 4, 12, 8);  // zero matrix
  try {
    cartan_factor(a, FactorDirection::PTimesU);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotInvertible);
  }
}
