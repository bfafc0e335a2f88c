#ifndef DVCURVE_WEIERSTRASS_HPP
#define DVCURVE_WEIERSTRASS_HPP

#include <utility>

#include "dvcurve/hensel.hpp"
#include "dvcurve/series.hpp"

namespace dvcurve {

// Result of Weierstrass preparation: input = t^t_power * unit * poly at the
// stated precision, with poly monic in x over T and unit a unit of the
// ambient ring.  The t-precision of poly/unit drops by t_power.
template <class S>
struct Prepared {
  int t_power;
  PolyOverT poly;
  S unit;
};

using LocalFactorization = Prepared<SeriesTTx>;
using RestrictedFactorization = Prepared<SeriesTx>;

// Division in T[[x]] by a distinguished polynomial: g monic of degree d with
// g = x^d mod t.  Returns (q, r) with f = q*g + r and deg_x r < d, exactly
// within the stored windows.  Proceeds level-by-level in t; terminates in
// n_t passes.
std::pair<SeriesTTx, PolyOverT> weierstrass_divide_local(const SeriesTTx& f,
                                                         const PolyOverT& g);

// Preparation in T[[x]]: f = t^m * u * g with g monic of degree d equal to
// the x-order of f/t^m mod t, g = x^d mod t, u a unit.
LocalFactorization prepare_local(const SeriesTTx& f);

// Preparation in T<x>: a = t^m * u * g with g in T[x] monic of degree
// d = deg(a/t^m mod t) and u a unit of T<x> (constant term in k^x).  The
// product t^m * g is the canonical witness of the global factor in F.
RestrictedFactorization prepare_restricted(const SeriesTx& a);

// Factorization along a branch of the line at infinity: a = t^m * c with c a
// unit of k((x^-1))[[t]] (the uniformizer of this desk ring is t).  a = 0 is
// returned as (zero, c = 1) rather than an error.
struct BranchFactorization {
  bool zero;
  int t_power;
  SeriesLaurentT unit;
};
BranchFactorization factor_branch(const SeriesLaurentT& a);

// a = base * root^n with base a lift into F and root a unit; computed by
// preparing a, lifting the mod-t reduction of the unit into F, and taking a
// Hensel n-th root of the ratio.
template <class S>
struct NthPowerForm {
  S base;
  S root;
  int exponent;
};

NthPowerForm<SeriesTx> factor_mod_nth_power(const SeriesTx& a, int n);
NthPowerForm<SeriesLaurentT> factor_mod_nth_power(const SeriesLaurentT& a, int n);

// View of the restricted n-th power base as an element of F = K(x).
GlobalElement as_global(const NthPowerForm<SeriesTx>& f);
GlobalElement as_global(const RestrictedFactorization& f);

}  // namespace dvcurve

#endif
