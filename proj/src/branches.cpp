#include "dvcurve/branches.hpp"

namespace dvcurve {

namespace {

// Newton-lift y = alpha*x to a parametrization of one branch: each step
// gains at least one x-order because dt/dy has x-order exactly one along
// the branch.
FPoly lift_branch(const SeriesXY& t, const FieldElem& alpha) {
  const GroundField& k = t.field();
  int window = t.deg_window();
  FPoly phi = FPoly::monomial(alpha, 1);
  SeriesXY ty = t.dy();
  for (int it = 0; it < 2 * window; ++it) {
    FPoly e = t.eval_y(phi);
    if (e.is_zero()) break;
    FPoly d = ty.eval_y(phi);
    int dv = d.x_order();
    if (dv < 0 || e.x_order() < dv)
      fail(ErrorCode::Internal, "branch lift lost regularity");
    FPoly esh(k), w(k);
    for (int j = dv; j <= e.degree(); ++j) esh.set_coeff(j - dv, e.coeff(j));
    for (int j = dv; j <= d.degree(); ++j) w.set_coeff(j - dv, d.coeff(j));
    FPoly delta = (esh * w.series_inverse(window)).truncated(window);
    phi = (phi - delta).truncated(window);
  }
  if (!t.eval_y(phi).is_zero())
    fail(ErrorCode::Internal, "branch parametrization did not converge");
  // t(x, phi) = 0 mod x^window pins phi one order lower (dt/dy has x-order
  // one along the branch)
  return phi.truncated(window - 1);
}

SeriesXY branch_generator(const GroundField& k, int window, const FPoly& phi) {
  SeriesXY g(k, window);
  g.set_ycoeff(1, FPoly::constant(FieldElem::one(k)));
  g.set_ycoeff(0, -phi);
  return g;
}

}  // namespace

std::vector<BranchData> branch_decompose(const NodalLocalRing& ring) {
  const SeriesXY& t = ring.t_element;
  const GroundField& k = t.field();
  if (k.characteristic() == 2)
    fail(ErrorCode::CharTwo, "branch decomposition needs characteristic != 2");
  int ord = t.order();
  if (ord < 0) fail(ErrorCode::PrecisionExhausted, "t vanishes within the window");
  if (ord != 2)
    fail(ErrorCode::NotSplitNode,
         "lowest form has degree " + std::to_string(ord) + ", need a quadratic");
  // lowest form  A y^2 + B xy + C x^2
  std::vector<FieldElem> q = t.form(2);
  FieldElem c = q[0], b = q[1], a = q[2];
  if (a.is_zero())
    fail(ErrorCode::NotSplitNode,
         "tangent cone contains the vertical line; branches are not graphs over x");
  FieldElem four = FieldElem::from_integer(k, 4);
  FieldElem disc = b * b - four * a * c;
  if (disc.is_zero())
    fail(ErrorCode::NotSplitNode, "degenerate tangent cone (double line)");
  auto s = disc.sqrt();
  if (!s)
    fail(ErrorCode::NotSplitNode, "tangent cone irreducible over " + k.str());
  FieldElem two_a_inv = (FieldElem::from_integer(k, 2) * a).inverse();
  FieldElem alpha1 = (-b + *s) * two_a_inv;
  FieldElem alpha2 = (-b - *s) * two_a_inv;

  std::vector<BranchData> out;
  for (const FieldElem& alpha : {alpha1, alpha2}) {
    FPoly phi = lift_branch(t, alpha);
    out.push_back({phi, branch_generator(k, t.deg_window(), phi), "c0"});
  }
  return out;
}

int branch_valuation(const SeriesXY& a, const BranchData& branch) {
  int depth = a.deg_window();
  std::vector<FPoly> coeffs = a.eps_expansion(branch.phi, depth);
  for (int j = 0; j < depth; ++j)
    if (!coeffs[static_cast<size_t>(j)].is_zero()) return j;
  fail(ErrorCode::PrecisionExhausted,
       "all expansion coefficients vanish within the window");
}

ObstructionReport obstruction_check(const SeriesXY& a, const NodalLocalRing& ring,
                                    const std::vector<std::string>* component_map) {
  std::vector<BranchData> branches = branch_decompose(ring);
  std::vector<std::string> comps;
  if (component_map) {
    if (component_map->size() != branches.size())
      fail(ErrorCode::ParseError, "component map size mismatch");
    comps = *component_map;
  } else {
    comps.assign(branches.size(), "c0");
  }
  ObstructionReport rep;
  for (const auto& br : branches) rep.valuations.push_back(branch_valuation(a, br));
  rep.pass = true;
  for (size_t i = 0; i < branches.size() && rep.pass; ++i)
    for (size_t j = i + 1; j < branches.size(); ++j) {
      if (comps[i] != comps[j]) continue;
      if (rep.valuations[i] != rep.valuations[j]) {
        rep.pass = false;
        rep.witness = ObstructionWitness{static_cast<int>(i), static_cast<int>(j),
                                         rep.valuations[i], rep.valuations[j]};
        break;
      }
    }
  return rep;
}

ValuationNormalization normalize_valuations(const SeriesXY& a,
                                            const NodalLocalRing& ring) {
  ObstructionReport rep = obstruction_check(a, ring, nullptr);
  if (!rep.pass) {
    const auto& w = *rep.witness;
    fail(ErrorCode::ObstructionFails,
         "branch valuations differ: v(" + std::to_string(w.branch_a) + ") = " +
             std::to_string(w.v_a) + " vs v(" + std::to_string(w.branch_b) +
             ") = " + std::to_string(w.v_b));
  }
  int m = rep.valuations[0];
  int window = a.deg_window();
  if (window - 2 * m <= 0)
    fail(ErrorCode::PrecisionExhausted,
         "window too small to divide out t^" + std::to_string(m));

  std::vector<BranchData> branches = branch_decompose(ring);
  const FPoly& phi1 = branches[0].phi;
  const FPoly& phi2 = branches[1].phi;
  // unit with t = (y - phi1)(y - phi2) * u0
  SeriesXY q1 = ring.t_element.div_y_linear(phi1).first;
  SeriesXY u0 = q1.div_y_linear(phi2).first;
  if (!u0.is_unit()) fail(ErrorCode::Internal, "node unit degenerate");
  SeriesXY u0_inv = u0.invert_unit();

  SeriesXY cur = a;
  for (int round = 0; round < m; ++round) {
    auto [d1, r1] = cur.div_y_linear(phi1);
    if (!r1.is_zero())
      fail(ErrorCode::Internal, "inexact division along the first branch");
    SeriesXY d2 = d1.div_y_linear(phi2).first;
    cur = d2 * u0_inv;
  }
  // restate in the honestly reduced window
  SeriesXY reduced(a.field(), window - 2 * m);
  for (int bdeg = 0; bdeg < window - 2 * m; ++bdeg)
    reduced.set_ycoeff(bdeg, cur.ycoeff(bdeg));
  return {m, reduced, rep};
}

}  // namespace dvcurve
