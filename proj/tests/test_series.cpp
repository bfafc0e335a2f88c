#include <doctest.h>

#include "dvcurve/hensel.hpp"
#include "test_util.hpp"

using namespace dvcurve;
using testutil::Rng;

namespace {
const GroundField kQ = GroundField::rationals();
const GroundField kF5 = GroundField::prime_field(5);
const GroundField kF7 = GroundField::prime_field(7);
}  // namespace

TEST_CASE("restricted series: identity and F_5 product") {
  // (x + t) * 1 = x + t
  SeriesTx a(kQ, 4);
  a.set_level(0, FPoly::variable(kQ));
  a.set_level(1, FPoly::constant(FieldElem::one(kQ)));
  CHECK(a * SeriesTx::one(kQ, 4) == a);

  // (2 + t)(3 + t) = 1 + 0 t + t^2 over F_5   (6 = 1, 5 = 0 mod 5)
  SeriesTx u(kF5, 3), v(kF5, 3);
  u.set_level(0, FPoly::constant(FieldElem::from_integer(kF5, 2)));
  u.set_level(1, FPoly::constant(FieldElem::one(kF5)));
  v.set_level(0, FPoly::constant(FieldElem::from_integer(kF5, 3)));
  v.set_level(1, FPoly::constant(FieldElem::one(kF5)));
  SeriesTx w = u * v;
  CHECK(w.level(0) == FPoly::constant(FieldElem::one(kF5)));
  CHECK(w.level(1).is_zero());
  CHECK(w.level(2) == FPoly::constant(FieldElem::one(kF5)));
}

TEST_CASE("ring axioms hold exactly at precision") {
  Rng rng(101);
  for (const GroundField& f : {kQ, kF7}) {
    for (int trial = 0; trial < 30; ++trial) {
      SeriesTx a = testutil::random_tx(rng, f, 5, 3);
      SeriesTx b = testutil::random_tx(rng, f, 5, 3);
      SeriesTx c = testutil::random_tx(rng, f, 5, 3);
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);

      SeriesLaurentT la = testutil::random_laurentt(rng, f, 4, 10, 6, -3, 3);
      SeriesLaurentT lb = testutil::random_laurentt(rng, f, 4, 10, 6, -3, 3);
      SeriesLaurentT lc = testutil::random_laurentt(rng, f, 4, 10, 6, -3, 3);
      CHECK(((la + lb) + lc).equal_at_precision(la + (lb + lc)));
      CHECK((la * (lb + lc)).equal_at_precision(la * lb + la * lc));

      SeriesXY xa = SeriesXY::from_x_poly(testutil::random_poly(rng, f, 3), 8);
      SeriesXY xb = SeriesXY::y_monomial(f, 2, 8);
      SeriesXY xc = SeriesXY::from_x_poly(testutil::random_poly(rng, f, 2), 8) * xb;
      CHECK((xa + xb) * xc == xa * xc + xb * xc);
    }
  }
}

TEST_CASE("unit inversion is two-sided in every ring") {
  Rng rng(7);
  for (const GroundField& f : {kQ, kF7}) {
    for (int trial = 0; trial < 20; ++trial) {
      SeriesTx u(f, 6);
      u.set_level(0, FPoly::constant(testutil::random_nonzero(rng, f)));
      for (int i = 1; i < 6; ++i) u.set_level(i, testutil::random_poly(rng, f, 3));
      SeriesTx uinv = u.invert_unit();
      CHECK(u * uinv == SeriesTx::one(f, 6));
      CHECK(uinv * u == SeriesTx::one(f, 6));

      SeriesTTx w = testutil::random_ttx(rng, f, 5, 6);
      w.set_level(0, w.level(0) + FPoly::constant(FieldElem::one(f)) -
                         FPoly::constant(w.level(0).coeff(0)));
      SeriesTTx winv = w.invert_unit();
      CHECK((w * winv).equal_at_precision(SeriesTTx::one(f, 5, 6)));

      SeriesLaurentT s = testutil::random_laurentt(rng, f, 4, 12, 6, -2, 2);
      if (!s.is_unit()) continue;
      SeriesLaurentT sinv = s.invert_unit();
      CHECK((s * sinv).equal_at_precision(SeriesLaurentT::one(f, 4, 12, 6)));
      CHECK((sinv * s).equal_at_precision(SeriesLaurentT::one(f, 4, 12, 6)));
    }
  }
}

TEST_CASE("geometric inverse of 1 + t x") {
  SeriesTx u(kQ, 6);
  u.set_level(0, FPoly::constant(FieldElem::one(kQ)));
  u.set_level(1, FPoly::variable(kQ));
  SeriesTx inv = u.invert_unit();
  // oracle: sum (-x)^i t^i
  FPoly minus_x = -FPoly::variable(kQ);
  FPoly pw = FPoly::constant(FieldElem::one(kQ));
  for (int i = 0; i < 6; ++i) {
    CHECK(inv.level(i) == pw);
    pw = pw * minus_x;
  }
  CHECK(u * inv == SeriesTx::one(kQ, 6));
}

TEST_CASE("unit predicates report the failing condition") {
  SeriesTx x = SeriesTx::from_poly(FPoly::variable(kQ), 4);
  CHECK(!x.is_unit());
  CHECK_THROWS_AS(x.invert_unit(), Error);

  SeriesTTx tt(kQ, 3, 4);
  tt.set_level(0, FPoly::variable(kQ));  // a_{0,0} = 0
  CHECK(!tt.is_unit());
  CHECK_THROWS_AS(tt.invert_unit(), Error);

  // x^-1 leads a perfectly good unit of k((x^-1))[[t]]
  SeriesLaurentT s(kQ, 3, 8, 4);
  s.set_level(0, LaurentPoly::monomial(FieldElem::one(kQ), -1, 8));
  CHECK(s.is_unit());
  CHECK((s * s.invert_unit()).equal_at_precision(SeriesLaurentT::one(kQ, 3, 8, 4)));
}

TEST_CASE("precision bookkeeping: outputs never claim more than inputs") {
  Rng rng(55);
  SeriesTx a = testutil::random_tx(rng, kQ, 6, 3);
  SeriesTx b = testutil::random_tx(rng, kQ, 4, 3);
  CHECK((a + b).tprec() == 4);
  CHECK((a * b).tprec() == 4);

  LaurentPoly f = testutil::random_laurent(rng, kQ, 10, -3, 2);
  LaurentPoly g = testutil::random_laurent(rng, kQ, 8, -2, 3);
  LaurentPoly prod = f * g;
  CHECK(prod.xprec() <= std::min(f.xprec(), g.xprec()));
  CHECK(prod.is_exact());  // finite inputs have no hidden tail

  // an inverse materializes a genuine tail; multiplying it by a positive
  // power then consumes floor honestly
  LaurentPoly u(kQ, 10);
  u.set_coeff(0, FieldElem::one(kQ));
  u.set_coeff(-1, FieldElem::one(kQ));
  LaurentPoly uinv = u.inverse();  // 1 - x^-1 + x^-2 - ..., floor 10
  CHECK(!uinv.is_exact());
  CHECK(uinv.valid_floor() == 10);
  LaurentPoly xcubed = LaurentPoly::monomial(FieldElem::one(kQ), 3, 10);
  CHECK((uinv * xcubed).valid_floor() == 7);
  CHECK((u * uinv).coeff(0).is_one());
}

TEST_CASE("valuation queries on window-zero values raise PrecisionExhausted") {
  SeriesTx z = SeriesTx::zero(kQ, 4);
  CHECK_THROWS_AS(z.t_valuation(), Error);
  LaurentPoly zp(kQ, 8);
  CHECK_THROWS_AS(zp.top_exponent(), Error);
  try {
    z.t_valuation();
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PrecisionExhausted);
  }
}

TEST_CASE("nodal product: (y - xz)(y + xz) = y^2 - x^2(1+x)") {
  int window = 12;
  FPoly one_plus_x(kQ);
  one_plus_x.set_coeff(0, FieldElem::one(kQ));
  one_plus_x.set_coeff(1, FieldElem::one(kQ));
  FPoly z = hensel_sqrt_in_x(one_plus_x, window);
  FPoly xz = (FPoly::variable(kQ) * z).truncated(window);

  SeriesXY lhs_a(kQ, window), lhs_b(kQ, window);
  lhs_a.set_ycoeff(1, FPoly::constant(FieldElem::one(kQ)));
  lhs_a.set_ycoeff(0, -xz);
  lhs_b.set_ycoeff(1, FPoly::constant(FieldElem::one(kQ)));
  lhs_b.set_ycoeff(0, xz);

  SeriesXY rhs(kQ, window);
  rhs.set_ycoeff(2, FPoly::constant(FieldElem::one(kQ)));
  FPoly x2_1px = FPoly::variable(kQ) * FPoly::variable(kQ) * one_plus_x;
  rhs.set_ycoeff(0, -x2_1px);

  CHECK((lhs_a * lhs_b).equal_at_precision(rhs));
}

TEST_CASE("global elements require a nonzero denominator") {
  SeriesTx one = SeriesTx::one(kQ, 4);
  CHECK_NOTHROW(GlobalElement(one, one));
  CHECK_THROWS_AS(GlobalElement(one, SeriesTx::zero(kQ, 4)), Error);
}

TEST_CASE("poly-over-T round trips through the restricted ring") {
  Rng rng(9);
  SeriesTx s = testutil::random_tx(rng, kF7, 5, 4);
  PolyOverT p = poly_from_tx(s);
  CHECK(p.to_series_tx() == s);
}
