#ifndef DVCURVE_SERIES_HPP
#define DVCURVE_SERIES_HPP

#include <string>
#include <utility>
#include <vector>

#include "dvcurve/poly.hpp"
#include "dvcurve/precision.hpp"

namespace dvcurve {

// ---------------------------------------------------------------------------
// Truncated Laurent series in x over k, the mod-t layer of k((x^-1))[[t]].
//
// A value is either exact (a finite element of k[x, x^-1], no hidden tail)
// or truncated with a validity floor: coefficients are correct for
// exponents >= -xprec, unknown below.  Finite inputs are exact; truncation
// enters only through inversion, which materializes the geometric tail to
// the declared window.  Operations recompute the floor soundly: the unknown
// tail of a truncated factor pollutes the product up to the other factor's
// top degree.
// ---------------------------------------------------------------------------
class LaurentPoly {
 public:
  LaurentPoly(const GroundField& f, int xprec)
      : field_(f), xprec_(xprec), lo_(0) {}

  static LaurentPoly zero(const GroundField& f, int xprec) {
    return LaurentPoly(f, xprec);
  }
  static LaurentPoly monomial(const FieldElem& c, int exp, int xprec);
  static LaurentPoly from_poly(const FPoly& p, int xprec);

  const GroundField& field() const { return field_; }
  // Materialization window and, for truncated values, the validity floor.
  int xprec() const { return xprec_; }
  bool is_exact() const { return exact_; }
  // Exponent below which coefficients are unknown (a large sentinel depth
  // for exact values).
  int valid_floor() const;

  bool is_zero() const { return c_.empty(); }  // zero within the window
  // Largest / smallest stored exponent with a nonzero coefficient;
  // PrecisionExhausted when zero within the window.
  int top_exponent() const;
  int low_exponent() const;

  FieldElem coeff(int exp) const;
  void set_coeff(int exp, const FieldElem& v);

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly scaled(const FieldElem& s) const;
  LaurentPoly shifted(int k) const;  // multiply by x^k (any sign)

  // Multiplicative inverse of a window-nonzero element; the result's floor
  // follows the honest rule xprec + 2*min(top, 0).
  LaurentPoly inverse() const;

  bool operator==(const LaurentPoly& o) const;  // same stored support+floor

  bool is_p_side() const;  // no positive powers of x
  bool is_u_side() const;  // polynomial in x (no negative powers)

  // Pointwise split f = f_P + f_U where f_P keeps exponents <= cut and
  // f_U keeps exponents > cut.
  std::pair<LaurentPoly, LaurentPoly> split_at(int cut) const;

  std::string str() const;

 private:
  void normalize();
  void check_field(const LaurentPoly& o) const {
    if (field_ != o.field_)
      fail(ErrorCode::FieldMismatch, "Laurent operands over different fields");
  }

  GroundField field_;
  int xprec_;
  bool exact_ = true;
  int lo_;
  std::vector<FieldElem> c_;  // exponent lo_ + i
};

// ---------------------------------------------------------------------------
// Element of T<x>, the t-adic completion of T[x]: a series
// sum_{i < n_t} c_i(x) t^i with polynomial coefficients.
// ---------------------------------------------------------------------------
class SeriesTx {
 public:
  SeriesTx(const GroundField& f, int tprec);

  static SeriesTx zero(const GroundField& f, int tprec) {
    return SeriesTx(f, tprec);
  }
  static SeriesTx one(const GroundField& f, int tprec);
  static SeriesTx from_poly(const FPoly& p, int tprec);

  const GroundField& field() const { return field_; }
  int tprec() const { return tprec_; }

  const FPoly& level(int i) const;
  void set_level(int i, const FPoly& p);

  bool is_zero() const;
  bool is_unit() const;  // c_0 a nonzero constant
  int t_valuation() const;  // PrecisionExhausted if zero at precision

  SeriesTx operator+(const SeriesTx& o) const;
  SeriesTx operator-(const SeriesTx& o) const;
  SeriesTx operator*(const SeriesTx& o) const;
  SeriesTx operator-() const;
  SeriesTx invert_unit() const;
  SeriesTx mul_tpow(int k) const;   // multiply by t^k
  SeriesTx div_tpow(int k) const;   // exact division; tprec drops by k
  SeriesTx truncated_t(int k) const;  // restrict to k <= tprec levels

  bool operator==(const SeriesTx& o) const;
  bool equal_at_precision(const SeriesTx& o) const;

  std::string str() const;

 private:
  void check_compat(const SeriesTx& o) const;
  GroundField field_;
  int tprec_;
  std::vector<FPoly> c_;
};

// ---------------------------------------------------------------------------
// Element of T[[x]]: doubly truncated, x-powers < n_x and t-powers < n_t.
// ---------------------------------------------------------------------------
class SeriesTTx {
 public:
  SeriesTTx(const GroundField& f, int tprec, int xprec);

  static SeriesTTx zero(const GroundField& f, int tprec, int xprec) {
    return SeriesTTx(f, tprec, xprec);
  }
  static SeriesTTx one(const GroundField& f, int tprec, int xprec);
  static SeriesTTx from_poly(const FPoly& p, int tprec, int xprec);

  const GroundField& field() const { return field_; }
  int tprec() const { return tprec_; }
  int xprec() const { return xprec_; }

  const FPoly& level(int i) const;
  void set_level(int i, const FPoly& p);

  bool is_zero() const;
  bool is_unit() const;  // a_{0,0} != 0
  int t_valuation() const;

  SeriesTTx operator+(const SeriesTTx& o) const;
  SeriesTTx operator-(const SeriesTTx& o) const;
  SeriesTTx operator*(const SeriesTTx& o) const;
  SeriesTTx operator-() const;
  SeriesTTx invert_unit() const;
  SeriesTTx mul_tpow(int k) const;
  SeriesTTx div_tpow(int k) const;
  SeriesTTx truncated_t(int k) const;

  bool operator==(const SeriesTTx& o) const;
  bool equal_at_precision(const SeriesTTx& o) const;

  std::string str() const;

 private:
  void check_compat(const SeriesTTx& o) const;
  GroundField field_;
  int tprec_, xprec_;
  std::vector<FPoly> c_;
};

// ---------------------------------------------------------------------------
// Element of k((x^-1))[[t]]: per-t-level truncated Laurent coefficients.
// m_x records the declared principal-part window for serialization.
// ---------------------------------------------------------------------------
class SeriesLaurentT {
 public:
  SeriesLaurentT(const GroundField& f, int tprec, int xprec, int mx);

  static SeriesLaurentT zero(const GroundField& f, int tprec, int xprec, int mx) {
    return SeriesLaurentT(f, tprec, xprec, mx);
  }
  static SeriesLaurentT one(const GroundField& f, int tprec, int xprec, int mx);
  static SeriesLaurentT from_laurent(const LaurentPoly& p, int tprec, int mx);

  const GroundField& field() const { return field_; }
  int tprec() const { return tprec_; }
  int mx() const { return mx_; }
  int xprec() const;  // min floor across levels

  const LaurentPoly& level(int i) const;
  void set_level(int i, const LaurentPoly& p);

  bool is_zero() const;
  bool is_unit() const;  // a_0 nonzero within the window
  int t_valuation() const;

  bool in_p_side() const;  // every level has no positive x-powers
  bool in_u_side() const;  // every level polynomial in x

  SeriesLaurentT operator+(const SeriesLaurentT& o) const;
  SeriesLaurentT operator-(const SeriesLaurentT& o) const;
  SeriesLaurentT operator*(const SeriesLaurentT& o) const;
  SeriesLaurentT operator-() const;
  SeriesLaurentT invert_unit() const;
  SeriesLaurentT mul_tpow(int k) const;
  SeriesLaurentT div_tpow(int k) const;
  SeriesLaurentT truncated_t(int k) const;

  bool operator==(const SeriesLaurentT& o) const;
  bool equal_at_precision(const SeriesLaurentT& o) const;

  std::string str() const;

 private:
  void check_compat(const SeriesLaurentT& o) const;
  GroundField field_;
  int tprec_;
  int mx_;
  std::vector<LaurentPoly> c_;
};

// ---------------------------------------------------------------------------
// Element of k[[x,y]] truncated at total degree < deg: c_[b] is the
// x-polynomial coefficient of y^b, of x-degree < deg - b.
// ---------------------------------------------------------------------------
class SeriesXY {
 public:
  SeriesXY(const GroundField& f, int deg);

  static SeriesXY zero(const GroundField& f, int deg) { return SeriesXY(f, deg); }
  static SeriesXY one(const GroundField& f, int deg);
  static SeriesXY from_x_poly(const FPoly& p, int deg);
  static SeriesXY y_monomial(const GroundField& f, int b, int deg);

  const GroundField& field() const { return field_; }
  int deg_window() const { return deg_; }
  int y_degree() const;  // largest b with nonzero coefficient, -1 if zero

  const FPoly& ycoeff(int b) const;
  void set_ycoeff(int b, const FPoly& p);
  FieldElem coeff(int a, int b) const;  // of x^a y^b

  bool is_zero() const;
  bool is_unit() const;  // nonzero constant term

  SeriesXY operator+(const SeriesXY& o) const;
  SeriesXY operator-(const SeriesXY& o) const;
  SeriesXY operator*(const SeriesXY& o) const;
  SeriesXY operator-() const;
  SeriesXY invert_unit() const;

  bool operator==(const SeriesXY& o) const;
  bool equal_at_precision(const SeriesXY& o) const;

  // Lowest total degree with a nonzero form, -1 if zero within the window.
  int order() const;
  // The degree-d homogeneous part as coefficients [x^d, x^{d-1}y, ..., y^d].
  std::vector<FieldElem> form(int d) const;

  SeriesXY dy() const;  // partial derivative in y

  // Substitute y := phi(x), truncating mod x^deg.
  FPoly eval_y(const FPoly& phi) const;

  // Expansion a(x, phi + eps) = sum_j a_j(x) eps^j for j < depth.
  std::vector<FPoly> eps_expansion(const FPoly& phi, int depth) const;

  // Division by the monic-in-y linear factor (y - phi): returns (q, r) with
  // *this = q * (y - phi) + r, r an x-polynomial.
  std::pair<SeriesXY, FPoly> div_y_linear(const FPoly& phi) const;

  std::string str() const;

 private:
  void normalize();
  void check_compat(const SeriesXY& o) const;
  GroundField field_;
  int deg_;
  std::vector<FPoly> c_;
};

// Element of the function field F = K(x) at precision: ratio of two
// restricted series with nonzero denominator.
struct GlobalElement {
  SeriesTx num;
  SeriesTx den;

  GlobalElement(SeriesTx n, SeriesTx d);
};

// Polynomial in x over truncated T = k[[t]]: the natural home of the
// Weierstrass polynomial g.  Coefficient of x^j is a t-series (an FPoly in
// the variable t, truncated mod t^tprec).
class PolyOverT {
 public:
  PolyOverT(const GroundField& f, int tprec);

  static PolyOverT from_x_poly(const FPoly& p, int tprec);  // constants in t

  const GroundField& field() const { return field_; }
  int tprec() const { return tprec_; }

  int degree() const { return static_cast<int>(cx_.size()) - 1; }
  bool is_zero() const { return cx_.empty(); }
  bool is_monic() const;

  FPoly xcoeff(int j) const;              // t-series (zero beyond the degree)
  void set_xcoeff(int j, const FPoly& ts);
  FieldElem coeff(int j, int i) const;    // of x^j t^i

  // Reduction mod t as a polynomial in x.
  FPoly mod_t() const;

  SeriesTx to_series_tx() const;
  SeriesTTx to_series_ttx(int xprec) const;
  SeriesLaurentT to_series_laurent(int xprec, int mx) const;

  bool operator==(const PolyOverT& o) const;

  std::string str() const;

 private:
  void trim();
  GroundField field_;
  int tprec_;
  std::vector<FPoly> cx_;
};

PolyOverT poly_from_tx(const SeriesTx& s);

}  // namespace dvcurve

#endif
