#include "dvcurve/hensel.hpp"

namespace dvcurve {

FPoly hensel_sqrt_in_x(const FPoly& f, int xprec) {
  const GroundField& k = f.field();
  if (k.characteristic() == 2)
    fail(ErrorCode::CharTwo, "square roots in k[[x]] need characteristic != 2");
  FieldElem c0 = f.coeff(0);
  if (c0.is_zero())
    fail(ErrorCode::NotASquareResidue, "constant term is zero");
  auto s0 = c0.sqrt();
  if (!s0)
    fail(ErrorCode::NotASquareResidue,
         "constant term " + c0.str() + " is not a square in " + k.str());

  FieldElem half = FieldElem::from_integer(k, 2).inverse();
  FPoly z = FPoly::constant(*s0);
  int prec = 1;
  while (prec < xprec) {
    prec = std::min(prec * 2, xprec);
    FPoly zinv = z.series_inverse(prec);
    z = ((z + (f.truncated(prec) * zinv).truncated(prec)).scaled(half)).truncated(prec);
  }
  return z.truncated(xprec);
}

}  // namespace dvcurve
