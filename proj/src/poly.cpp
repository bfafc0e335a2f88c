#include "dvcurve/poly.hpp"

namespace dvcurve {

FPoly FPoly::constant(const FieldElem& c) {
  FPoly p(c.field());
  if (!c.is_zero()) p.c_.push_back(c);
  return p;
}

FPoly FPoly::monomial(const FieldElem& c, int deg) {
  FPoly p(c.field());
  if (c.is_zero()) return p;
  p.c_.assign(static_cast<size_t>(deg) + 1, FieldElem::zero(c.field()));
  p.c_.back() = c;
  return p;
}

FPoly FPoly::variable(const GroundField& f) {
  return monomial(FieldElem::one(f), 1);
}

void FPoly::set_coeff(int i, const FieldElem& v) {
  if (i < 0) fail(ErrorCode::Internal, "negative exponent");
  if (i >= static_cast<int>(c_.size()))
    c_.resize(static_cast<size_t>(i) + 1, FieldElem::zero(field_));
  c_[static_cast<size_t>(i)] = v;
  trim();
}

FieldElem FPoly::leading() const {
  if (c_.empty()) return FieldElem::zero(field_);
  return c_.back();
}

FPoly FPoly::operator+(const FPoly& o) const {
  check_field(o);
  FPoly r(field_);
  r.c_.resize(std::max(c_.size(), o.c_.size()), FieldElem::zero(field_));
  for (size_t i = 0; i < r.c_.size(); ++i) {
    if (i < c_.size()) r.c_[i] = r.c_[i] + c_[i];
    if (i < o.c_.size()) r.c_[i] = r.c_[i] + o.c_[i];
  }
  r.trim();
  return r;
}

FPoly FPoly::operator-(const FPoly& o) const { return *this + (-o); }

FPoly FPoly::operator-() const {
  FPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

FPoly FPoly::operator*(const FPoly& o) const {
  check_field(o);
  if (is_zero() || o.is_zero()) return FPoly(field_);
  FPoly r(field_);
  r.c_.assign(c_.size() + o.c_.size() - 1, FieldElem::zero(field_));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j)
      r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
  }
  r.trim();
  return r;
}

FPoly FPoly::scaled(const FieldElem& s) const {
  FPoly r = *this;
  for (auto& c : r.c_) c = c * s;
  r.trim();
  return r;
}

FPoly FPoly::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  FPoly r(field_);
  r.c_.assign(c_.size() + static_cast<size_t>(k), FieldElem::zero(field_));
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i + static_cast<size_t>(k)] = c_[i];
  return r;
}

bool FPoly::operator==(const FPoly& o) const {
  if (field_ != o.field_ || c_.size() != o.c_.size()) return false;
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != o.c_[i]) return false;
  return true;
}

std::pair<FPoly, FPoly> FPoly::divmod(const FPoly& g) const {
  check_field(g);
  if (g.is_zero()) fail(ErrorCode::NotAUnit, "division by zero polynomial");
  FPoly q(field_), r = *this;
  FieldElem lc_inv = g.leading().inverse();
  int dg = g.degree();
  while (!r.is_zero() && r.degree() >= dg) {
    FieldElem s = r.leading() * lc_inv;
    int k = r.degree() - dg;
    q.set_coeff(k, q.coeff(k) + s);
    r = r - g.scaled(s).shifted(k);
  }
  return {q, r};
}

FPoly FPoly::truncated(int k) const {
  if (k <= 0) return FPoly(field_);
  if (degree() < k) return *this;
  FPoly r(field_);
  r.c_.assign(c_.begin(), c_.begin() + k);
  r.trim();
  return r;
}

int FPoly::x_order() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return static_cast<int>(i);
  return -1;
}

FPoly FPoly::series_inverse(int k) const {
  if (is_zero() || c_[0].is_zero())
    fail(ErrorCode::NotAUnit, "series inverse needs nonzero constant term");
  FPoly inv = constant(c_[0].inverse());
  // Newton: inv <- inv * (2 - f * inv), doubling x-precision
  int prec = 1;
  FPoly two = constant(FieldElem::from_integer(field_, 2));
  while (prec < k) {
    prec *= 2;
    FPoly t = truncated(prec) * inv;
    inv = (inv * (two - t)).truncated(prec);
  }
  return inv.truncated(k);
}

FPoly FPoly::derivative() const {
  FPoly r(field_);
  for (int i = 1; i <= degree(); ++i)
    r.set_coeff(i - 1, coeff(i) * FieldElem::from_integer(field_, i));
  return r;
}

FieldElem FPoly::eval(const FieldElem& a) const {
  FieldElem acc = FieldElem::zero(field_);
  for (int i = degree(); i >= 0; --i) acc = acc * a + coeff(i);
  return acc;
}

FPoly FPoly::compose_truncated(const FPoly& g, int k) const {
  check_field(g);
  FPoly acc(field_);
  for (int i = degree(); i >= 0; --i) {
    acc = (acc * g).truncated(k);
    acc = acc + constant(coeff(i));
  }
  return acc.truncated(k);
}

std::string FPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = 0; i <= degree(); ++i) {
    if (coeff(i).is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += coeff(i).str();
    if (i > 0) s += "*" + var + "^" + std::to_string(i);
  }
  return s;
}

}  // namespace dvcurve
