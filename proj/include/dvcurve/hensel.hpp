#ifndef DVCURVE_HENSEL_HPP
#define DVCURVE_HENSEL_HPP

#include "dvcurve/series.hpp"

namespace dvcurve {

namespace detail {

template <class S>
S scale_series(const S& s, const FieldElem& c) {
  S r = s;
  for (int i = 0; i < s.tprec(); ++i) r.set_level(i, s.level(i).scaled(c));
  return r;
}

template <class S>
S series_pow(const S& base, int e, const S& one) {
  S acc = one;
  for (int i = 0; i < e; ++i) acc = acc * base;
  return acc;
}

inline SeriesTx ring_one_like(const SeriesTx& s) {
  return SeriesTx::one(s.field(), s.tprec());
}
inline SeriesTTx ring_one_like(const SeriesTTx& s) {
  return SeriesTTx::one(s.field(), s.tprec(), s.xprec());
}
inline SeriesLaurentT ring_one_like(const SeriesLaurentT& s) {
  return SeriesLaurentT::one(s.field(), s.tprec(), s.xprec(), s.mx());
}

}  // namespace detail

// n-th root of a unit congruent to 1 mod t, by Newton iteration.  Each step
// doubles the correct t-precision, so ceil(log2 n_t) + 1 steps suffice.
// Preconditions: u = 1 mod t, and n not divisible by the field
// characteristic (else CharDividesN / BadResidue).
template <class S>
S hensel_nth_root(const S& u, int n) {
  if (n <= 0) fail(ErrorCode::ParseError, "root exponent must be positive");
  long long ch = u.field().characteristic();
  if (ch > 0 && n % ch == 0)
    fail(ErrorCode::CharDividesN,
         "exponent " + std::to_string(n) + " divisible by characteristic " +
             std::to_string(ch));
  S one = detail::ring_one_like(u);
  if (!(u - one).level(0).is_zero())
    fail(ErrorCode::BadResidue, "n-th root requires u = 1 mod t");

  FieldElem n_inv = FieldElem::from_integer(u.field(), n).inverse();
  // climb the precision ladder: each Newton step doubles the correct
  // t-precision, so work at the doubled truncation as we go
  int prec = 1;
  S r = detail::ring_one_like(u.truncated_t(1));
  while (prec < u.tprec()) {
    prec = std::min(2 * prec, u.tprec());
    S ut = u.truncated_t(prec);
    S rt = r.truncated_t(prec);
    // re-embed the current iterate at the wider truncation
    S widened = detail::ring_one_like(ut);
    for (int i = 0; i < rt.tprec(); ++i) widened.set_level(i, rt.level(i));
    S rpow = detail::series_pow(widened, n - 1, detail::ring_one_like(ut));
    S num = rpow * widened - ut;  // r^n - u
    S dinv = detail::scale_series(rpow.invert_unit(), n_inv);
    r = widened - num * dinv;
  }
  return r;
}

// Square root in k[[x]] of a univariate series (given as a polynomial
// truncated mod x^xprec).  The constant term must be a nonzero square in k
// and the characteristic must not be two.
FPoly hensel_sqrt_in_x(const FPoly& f, int xprec);

}  // namespace dvcurve

#endif
