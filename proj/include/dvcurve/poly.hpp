#ifndef DVCURVE_POLY_HPP
#define DVCURVE_POLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "dvcurve/ground.hpp"

namespace dvcurve {

// Dense univariate polynomial over the ground field.  Coefficient vector is
// kept trimmed (no trailing zeros); the zero polynomial has an empty vector
// and degree -1.
class FPoly {
 public:
  explicit FPoly(const GroundField& f) : field_(f) {}
  FPoly(const GroundField& f, std::vector<FieldElem> coeffs)
      : field_(f), c_(std::move(coeffs)) {
    trim();
  }

  static FPoly zero(const GroundField& f) { return FPoly(f); }
  static FPoly constant(const FieldElem& c);
  static FPoly monomial(const FieldElem& c, int deg);
  static FPoly variable(const GroundField& f);  // x

  const GroundField& field() const { return field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }

  FieldElem coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size()))
      return FieldElem::zero(field_);
    return c_[static_cast<size_t>(i)];
  }
  void set_coeff(int i, const FieldElem& v);
  FieldElem leading() const;

  FPoly operator+(const FPoly& o) const;
  FPoly operator-(const FPoly& o) const;
  FPoly operator*(const FPoly& o) const;
  FPoly operator-() const;
  FPoly scaled(const FieldElem& s) const;
  FPoly shifted(int k) const;  // multiply by x^k, k >= 0

  bool operator==(const FPoly& o) const;
  bool operator!=(const FPoly& o) const { return !(*this == o); }

  // Division with remainder; divisor must have an invertible leading
  // coefficient (always true over a field unless zero).
  std::pair<FPoly, FPoly> divmod(const FPoly& g) const;

  // Truncation mod x^k.
  FPoly truncated(int k) const;

  // Order of vanishing at x = 0; -1 for the zero polynomial.
  int x_order() const;

  // Inverse as a power series mod x^k (constant term must be nonzero).
  FPoly series_inverse(int k) const;

  FPoly derivative() const;
  FieldElem eval(const FieldElem& a) const;

  // Substitute another polynomial, truncating the result mod x^k.
  FPoly compose_truncated(const FPoly& g, int k) const;

  const std::vector<FieldElem>& coeffs() const { return c_; }
  std::string str(const std::string& var = "x") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  void check_field(const FPoly& o) const {
    if (field_ != o.field_)
      fail(ErrorCode::FieldMismatch, "polynomials over different fields");
  }

  GroundField field_;
  std::vector<FieldElem> c_;
};

}  // namespace dvcurve

#endif
