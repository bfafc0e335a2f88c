#ifndef DVCURVE_CARTAN_HPP
#define DVCURVE_CARTAN_HPP

#include <utility>
#include <vector>

#include "dvcurve/series.hpp"

namespace dvcurve {

// Square matrix over truncated k((x^-1)), the mod-t layer.
class LaurentMatrix {
 public:
  LaurentMatrix(int n, const GroundField& f, int xprec);
  static LaurentMatrix identity(int n, const GroundField& f, int xprec);

  int dim() const { return n_; }
  const GroundField& field() const { return field_; }

  const LaurentPoly& at(int i, int j) const { return e_[idx(i, j)]; }
  void set(int i, int j, const LaurentPoly& v) { e_[idx(i, j)] = v; }

  LaurentMatrix operator*(const LaurentMatrix& o) const;
  LaurentMatrix operator-(const LaurentMatrix& o) const;
  bool is_zero() const;

  // col_dst += q * col_src
  void col_addmul(int dst, int src, const LaurentPoly& q);
  // row_dst += q * row_src
  void row_addmul(int dst, int src, const LaurentPoly& q);

  bool all_p_side() const;
  bool all_u_side() const;
  int min_xprec() const;

  // Gauss-Jordan inverse over the Laurent field at precision; NotInvertible
  // when a pivot column vanishes within the window.
  LaurentMatrix inverse() const;

 private:
  size_t idx(int i, int j) const {
    return static_cast<size_t>(i) * static_cast<size_t>(n_) + static_cast<size_t>(j);
  }
  int n_;
  GroundField field_;
  std::vector<LaurentPoly> e_;
};

// Square matrix over k((x^-1))[[t]].
class RingMatrix {
 public:
  RingMatrix(int n, const GroundField& f, int tprec, int xprec, int mx);
  static RingMatrix identity(int n, const GroundField& f, int tprec, int xprec, int mx);
  // Lift a mod-t matrix t-adically as constants.
  static RingMatrix lift(const LaurentMatrix& m, int tprec, int mx);

  int dim() const { return n_; }
  const GroundField& field() const { return field_; }
  int tprec() const;
  int mx() const { return mx_; }

  const SeriesLaurentT& at(int i, int j) const { return e_[idx(i, j)]; }
  void set(int i, int j, const SeriesLaurentT& v);

  RingMatrix operator*(const RingMatrix& o) const;
  RingMatrix operator+(const RingMatrix& o) const;
  RingMatrix operator-(const RingMatrix& o) const;

  LaurentMatrix mod_t() const;
  // Coefficient matrix of t^i.
  LaurentMatrix t_coefficient(int i) const;

  bool all_p_side() const;
  bool all_u_side() const;
  int min_xprec() const;

  // First t-level with a nonzero coefficient matrix; tprec if zero at
  // precision.
  int t_order() const;

  bool equal_at_precision(const RingMatrix& o) const;

 private:
  size_t idx(int i, int j) const {
    return static_cast<size_t>(i) * static_cast<size_t>(n_) + static_cast<size_t>(j);
  }
  int n_;
  GroundField field_;
  int mx_;
  std::vector<SeriesLaurentT> e_;
};

enum class FactorDirection { PTimesU, PprimeTimesUprime };

// A = left * right at precision, with left supported on x-powers <= 0
// entrywise and right polynomial in x entrywise; both invertible over the
// ambient ring at precision.
struct FactorizationPair {
  RingMatrix left;
  RingMatrix right;
  FactorDirection direction;
  // Residual t-order recorded after each successive-approximation level;
  // entry i must be > i.
  std::vector<int> step_orders;
  // x-window floor consumed by the mod-t reduction and iteration.
  int consumed_window;
};

struct PatchCertificate {
  bool identity_ok;       // left^-1 * A * right^-1 == I at precision
  int residual_t_order;   // t-order of the certificate residual (== n_t)
  std::vector<int> step_orders;
  int consumed_window;
};

struct PatchSolution {
  FactorizationPair factors;
  PatchCertificate certificate;
};

// Direct-sum decomposition k((x^-1)) = k[[x^-1]] + x k[x]: f_P keeps
// exponents <= 0 (constants included), f_U the positive polynomial part.
std::pair<LaurentPoly, LaurentPoly> additive_split(const LaurentPoly& f);

// Nonzero truncated Laurent scalar: a = b * c with c = lc * x^j the leading
// monomial and b a unit of k[[x^-1]] with constant term 1.
std::pair<LaurentPoly, LaurentPoly> factor_mod_t_scalar(const LaurentPoly& a);

// Mod-t Birkhoff-style factorization: A = B * C with B invertible over
// k[[x^-1]] (normalized to B = I mod x^-1) and C invertible with Laurent
// polynomial entries.  Column reduction over k[x] clears dependent leading
// vectors; the extracted diagonal of x-powers is absorbed into C.
struct ModTFactorization {
  LaurentMatrix left;
  LaurentMatrix right;
};
ModTFactorization factor_mod_t_matrix(const LaurentMatrix& a);

// Full t-adic factorization by mod-t seeding plus successive approximation.
// The direction flag selects which side absorbs the level constants:
// PTimesU routes them to the left (P) factor, PprimeTimesUprime to the
// right, realizing the two variants of the patching decomposition.
FactorizationPair cartan_factor(const RingMatrix& a, FactorDirection dir);

// cartan_factor plus an explicit certificate that left^-1 * A * right^-1 is
// the identity at precision: the patching problem with transition matrix A
// is solved by adjusting the two bases by the factors.
PatchSolution solve_patching_problem(const RingMatrix& a);

}  // namespace dvcurve

#endif
