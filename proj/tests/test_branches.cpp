#include <doctest.h>

#include "dvcurve/branches.hpp"
#include "dvcurve/hensel.hpp"
#include "test_util.hpp"

using namespace dvcurve;

namespace {
const GroundField kQ = GroundField::rationals();
const GroundField kF2 = GroundField::prime_field(2);

// t = y^2 - x^2 (1 + x), the split node with branches y = +-x sqrt(1+x)
NodalLocalRing node_ring(const GroundField& k, int window) {
  SeriesXY t(k, window);
  t.set_ycoeff(2, FPoly::constant(FieldElem::one(k)));
  FPoly x = FPoly::variable(k);
  FPoly one_plus_x(k);
  one_plus_x.set_coeff(0, FieldElem::one(k));
  one_plus_x.set_coeff(1, FieldElem::one(k));
  t.set_ycoeff(0, -(x * x * one_plus_x));
  return {t};
}

SeriesXY y_minus(const FPoly& phi, int window) {
  SeriesXY g(phi.field(), window);
  g.set_ycoeff(1, FPoly::constant(FieldElem::one(phi.field())));
  g.set_ycoeff(0, -phi);
  return g;
}
}  // namespace

TEST_CASE("branches of y^2 - x^2(1+x) are y = +-x sqrt(1+x)") {
  int window = 12;
  NodalLocalRing ring = node_ring(kQ, window);
  std::vector<BranchData> br = branch_decompose(ring);
  REQUIRE(br.size() == 2);

  // oracle: binomial series for sqrt(1+x), independently of the lift; the
  // parametrization is pinned mod x^{window-1}
  std::vector<FieldElem> bin = testutil::binomial_root_series(kQ, 2, window);
  FPoly z(kQ);
  for (int i = 0; i < window; ++i) z.set_coeff(i, bin[static_cast<size_t>(i)]);
  FPoly xz = (FPoly::variable(kQ) * z).truncated(window - 1);
  CHECK(br[0].phi == xz);
  CHECK(br[1].phi == -xz);

  // generators multiply to t times a unit
  SeriesXY prod = br[0].generator * br[1].generator;
  SeriesXY q1 = ring.t_element.div_y_linear(br[0].phi).first;
  SeriesXY unit = q1.div_y_linear(br[1].phi).first;
  CHECK(unit.is_unit());
  SeriesXY recomposed = prod * unit;
  // compare away from the top truncation order
  SeriesXY diff = recomposed - ring.t_element;
  CHECK((diff.is_zero() || diff.order() >= window - 1));
}

TEST_CASE("valuations separate the two branches of the node") {
  int window = 12;
  NodalLocalRing ring = node_ring(kQ, window);
  std::vector<BranchData> br = branch_decompose(ring);
  SeriesXY a = y_minus(br[0].phi, window);  // y - x sqrt(1+x)

  CHECK(branch_valuation(a, br[0]) == 1);
  CHECK(branch_valuation(a, br[1]) == 0);
  CHECK(branch_valuation(ring.t_element, br[0]) == 1);
  CHECK(branch_valuation(ring.t_element, br[1]) == 1);
}

TEST_CASE("obstruction verdicts") {
  int window = 12;
  NodalLocalRing ring = node_ring(kQ, window);
  std::vector<BranchData> br = branch_decompose(ring);
  SeriesXY a = y_minus(br[0].phi, window);

  ObstructionReport fail_rep = obstruction_check(a, ring);
  CHECK(!fail_rep.pass);
  REQUIRE(fail_rep.witness.has_value());
  CHECK(fail_rep.witness->v_a == 1);
  CHECK(fail_rep.witness->v_b == 0);

  ObstructionReport pass_rep = obstruction_check(ring.t_element, ring);
  CHECK(pass_rep.pass);
  CHECK(pass_rep.valuations == std::vector<int>{1, 1});

  // distinct components: vacuously fine for any a
  std::vector<std::string> comps = {"left", "right"};
  CHECK(obstruction_check(a, ring, &comps).pass);
}

TEST_CASE("verdict is invariant under unit multiples") {
  int window = 10;
  NodalLocalRing ring = node_ring(kQ, window);
  std::vector<BranchData> br = branch_decompose(ring);
  SeriesXY unit = SeriesXY::one(kQ, window);
  unit.set_ycoeff(0, unit.ycoeff(0) + FPoly::variable(kQ));
  unit.set_ycoeff(1, FPoly::constant(FieldElem::from_integer(kQ, 3)));
  REQUIRE(unit.is_unit());

  for (const SeriesXY& a : {y_minus(br[0].phi, window), ring.t_element}) {
    ObstructionReport plain = obstruction_check(a, ring);
    ObstructionReport scaled = obstruction_check(a * unit, ring);
    CHECK(plain.pass == scaled.pass);
    CHECK(plain.valuations == scaled.valuations);
  }
}

TEST_CASE("valuations are additive within the window budget") {
  int window = 14;
  NodalLocalRing ring = node_ring(kQ, window);
  std::vector<BranchData> br = branch_decompose(ring);
  SeriesXY g0 = br[0].generator;
  SeriesXY a = g0 * g0;                       // valuation 2 on branch 0
  SeriesXY b = ring.t_element;                // valuation 1 on both
  CHECK(branch_valuation(a, br[0]) == 2);
  CHECK(branch_valuation(a * b, br[0]) ==
        branch_valuation(a, br[0]) + branch_valuation(b, br[0]));
  CHECK(branch_valuation(a * b, br[1]) ==
        branch_valuation(a, br[1]) + branch_valuation(b, br[1]));
}

TEST_CASE("node guards: irreducible, degenerate, vertical, char two") {
  // y^2 + x^2 over Q: irreducible tangent cone
  SeriesXY t1(kQ, 8);
  t1.set_ycoeff(2, FPoly::constant(FieldElem::one(kQ)));
  t1.set_ycoeff(0, FPoly::variable(kQ) * FPoly::variable(kQ));
  try {
    branch_decompose({t1});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSplitNode);
  }

  // y^2 - x^2 splits into y = +-x
  SeriesXY t2(kQ, 8);
  t2.set_ycoeff(2, FPoly::constant(FieldElem::one(kQ)));
  t2.set_ycoeff(0, -(FPoly::variable(kQ) * FPoly::variable(kQ)));
  std::vector<BranchData> br = branch_decompose({t2});
  CHECK(br[0].phi == FPoly::variable(kQ));
  CHECK(br[1].phi == -FPoly::variable(kQ));

  // double line
  SeriesXY t3(kQ, 8);
  t3.set_ycoeff(2, FPoly::constant(FieldElem::one(kQ)));
  CHECK_THROWS_AS(branch_decompose({t3}), Error);

  // tangent cone containing the vertical line: xy
  SeriesXY t4(kQ, 8);
  t4.set_ycoeff(1, FPoly::variable(kQ));
  CHECK_THROWS_AS(branch_decompose({t4}), Error);

  // characteristic two
  SeriesXY t5(kF2, 8);
  t5.set_ycoeff(2, FPoly::constant(FieldElem::one(kF2)));
  t5.set_ycoeff(0, FPoly::variable(kF2) * FPoly::variable(kF2));
  try {
    branch_decompose({t5});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CharTwo);
  }
}

TEST_CASE("valuation normalization divides out the common power") {
  int window = 14;
  NodalLocalRing ring = node_ring(kQ, window);

  ValuationNormalization n1 = normalize_valuations(ring.t_element, ring);
  CHECK(n1.t_power == 1);
  CHECK(n1.reduced.equal_at_precision(SeriesXY::one(kQ, n1.reduced.deg_window())));

  FPoly one_plus_x(kQ);
  one_plus_x.set_coeff(0, FieldElem::one(kQ));
  one_plus_x.set_coeff(1, FieldElem::one(kQ));
  SeriesXY a = ring.t_element * ring.t_element * SeriesXY::from_x_poly(one_plus_x, window);
  ValuationNormalization n2 = normalize_valuations(a, ring);
  CHECK(n2.t_power == 2);
  CHECK(n2.reduced.equal_at_precision(
      SeriesXY::from_x_poly(one_plus_x, n2.reduced.deg_window())));

  // valuations of the reduced element vanish on both branches
  std::vector<BranchData> br = branch_decompose(ring);
  CHECK(branch_valuation(n2.reduced, br[0]) == 0);
  CHECK(branch_valuation(n2.reduced, br[1]) == 0);

  // the counterexample element cannot be normalized
  SeriesXY bad = y_minus(br[0].phi, window);
  try {
    normalize_valuations(bad, ring);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ObstructionFails);
  }
}
