#include "dvcurve/series.hpp"

#include <algorithm>

namespace dvcurve {

// ---------------------------------------------------------------- Laurent

namespace {
// sentinel depth for exact values; far beyond any working window
constexpr int kExactFloor = 1 << 24;
}  // namespace

int LaurentPoly::valid_floor() const { return exact_ ? kExactFloor : xprec_; }

LaurentPoly LaurentPoly::monomial(const FieldElem& c, int exp, int xprec) {
  LaurentPoly p(c.field(), xprec);
  p.lo_ = exp;
  p.c_.push_back(c);
  p.normalize();
  return p;
}

LaurentPoly LaurentPoly::from_poly(const FPoly& p, int xprec) {
  LaurentPoly r(p.field(), xprec);
  r.lo_ = 0;
  r.c_ = p.coeffs();
  r.normalize();
  return r;
}

void LaurentPoly::normalize() {
  // drop leading/trailing zeros, and below-floor content for truncated
  // values; dropping a nonzero coefficient makes an exact value truncated
  size_t drop = 0;
  int floor_exp = -valid_floor();
  while (drop < c_.size() &&
         (c_[drop].is_zero() || lo_ + static_cast<int>(drop) < floor_exp)) {
    if (!c_[drop].is_zero()) exact_ = false;
    ++drop;
  }
  if (drop) {
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(drop));
    lo_ += static_cast<int>(drop);
  }
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  if (c_.empty()) lo_ = 0;
}

int LaurentPoly::top_exponent() const {
  if (c_.empty())
    fail(ErrorCode::PrecisionExhausted, "Laurent value is zero within the window");
  return lo_ + static_cast<int>(c_.size()) - 1;
}

int LaurentPoly::low_exponent() const {
  if (c_.empty())
    fail(ErrorCode::PrecisionExhausted, "Laurent value is zero within the window");
  return lo_;
}

FieldElem LaurentPoly::coeff(int exp) const {
  int i = exp - lo_;
  if (i < 0 || i >= static_cast<int>(c_.size())) return FieldElem::zero(field_);
  return c_[static_cast<size_t>(i)];
}

void LaurentPoly::set_coeff(int exp, const FieldElem& v) {
  if (c_.empty()) {
    lo_ = exp;
    c_.push_back(v);
    normalize();
    return;
  }
  if (exp < lo_) {
    c_.insert(c_.begin(), static_cast<size_t>(lo_ - exp), FieldElem::zero(field_));
    lo_ = exp;
  } else if (exp >= lo_ + static_cast<int>(c_.size())) {
    c_.resize(static_cast<size_t>(exp - lo_) + 1, FieldElem::zero(field_));
  }
  c_[static_cast<size_t>(exp - lo_)] = v;
  normalize();
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  check_field(o);
  LaurentPoly r(field_, std::min(xprec_, o.xprec_));
  r.exact_ = exact_ && o.exact_;
  if (c_.empty() && o.c_.empty()) return r;
  int lo = std::min(c_.empty() ? o.lo_ : lo_, o.c_.empty() ? lo_ : o.lo_);
  int hi = lo;
  if (!c_.empty()) hi = std::max(hi, lo_ + static_cast<int>(c_.size()) - 1);
  if (!o.c_.empty()) hi = std::max(hi, o.lo_ + static_cast<int>(o.c_.size()) - 1);
  r.lo_ = lo;
  r.c_.assign(static_cast<size_t>(hi - lo) + 1, FieldElem::zero(field_));
  for (size_t i = 0; i < c_.size(); ++i)
    r.c_[static_cast<size_t>(lo_ - lo) + i] = r.c_[static_cast<size_t>(lo_ - lo) + i] + c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i)
    r.c_[static_cast<size_t>(o.lo_ - lo) + i] = r.c_[static_cast<size_t>(o.lo_ - lo) + i] + o.c_[i];
  r.normalize();
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  check_field(o);
  int hi1 = c_.empty() ? 0 : std::max(lo_ + static_cast<int>(c_.size()) - 1, 0);
  int hi2 = o.c_.empty() ? 0 : std::max(o.lo_ + static_cast<int>(o.c_.size()) - 1, 0);
  // the unknown tail of a truncated factor pollutes the product up to the
  // other factor's top degree; exact factors contribute no tail
  int nout = std::min(xprec_, o.xprec_);
  if (!exact_) nout = std::min(nout, xprec_ - hi2);
  if (!o.exact_) nout = std::min(nout, o.xprec_ - hi1);
  LaurentPoly r(field_, nout);
  r.exact_ = exact_ && o.exact_;
  if (c_.empty() || o.c_.empty()) return r;
  r.lo_ = lo_ + o.lo_;
  r.c_.assign(c_.size() + o.c_.size() - 1, FieldElem::zero(field_));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j)
      r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
  }
  r.normalize();
  return r;
}

LaurentPoly LaurentPoly::scaled(const FieldElem& s) const {
  LaurentPoly r = *this;
  for (auto& c : r.c_) c = c * s;
  r.normalize();
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  r.lo_ += k;
  r.xprec_ -= k;
  r.normalize();
  return r;
}

LaurentPoly LaurentPoly::inverse() const {
  if (c_.empty())
    fail(ErrorCode::NotAUnit, "inverse of a window-zero Laurent value");
  int e = top_exponent();
  FieldElem c = coeff(e);
  if (c_.size() == 1) {
    // monomial: the inverse is again an exact monomial
    LaurentPoly r = monomial(c.inverse(), -e, xprec_);
    r.exact_ = exact_;
    return r;
  }
  // write *this = c x^e (1 + g) with g supported on exponents <= -1, and
  // materialize the geometric tail down to the window depth
  LaurentPoly g = shifted(-e).scaled(c.inverse());
  g.set_coeff(0, FieldElem::zero(field_));
  g.exact_ = false;
  g.xprec_ = xprec_ + e;
  g.normalize();
  LaurentPoly h = monomial(FieldElem::one(field_), 0, g.xprec_);
  LaurentPoly term = h;
  while (true) {
    term = term * (-g);
    if (term.is_zero()) break;
    h = h + term;
  }
  LaurentPoly inv = h.scaled(c.inverse()).shifted(-e);
  // never claim more than the declared window
  if (inv.xprec_ > xprec_) inv.xprec_ = xprec_;
  inv.exact_ = false;
  inv.normalize();
  return inv;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  if (field_ != o.field_) return false;
  if (c_.empty() && o.c_.empty()) return true;
  return lo_ == o.lo_ && c_ == o.c_;
}

bool LaurentPoly::is_p_side() const {
  return c_.empty() || top_exponent() <= 0;
}

bool LaurentPoly::is_u_side() const {
  return c_.empty() || lo_ >= 0;
}

std::pair<LaurentPoly, LaurentPoly> LaurentPoly::split_at(int cut) const {
  LaurentPoly p(field_, xprec_), u(field_, xprec_);
  p.exact_ = exact_;
  // the polynomial side is complete iff everything above the cut is known
  u.exact_ = exact_ || valid_floor() >= -(cut + 1);
  for (size_t i = 0; i < c_.size(); ++i) {
    int exp = lo_ + static_cast<int>(i);
    if (c_[i].is_zero()) continue;
    (exp <= cut ? p : u).set_coeff(exp, c_[i]);
  }
  return {p, u};
}

std::string LaurentPoly::str() const {
  if (c_.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    int exp = lo_ + static_cast<int>(i);
    s += c_[i].str();
    if (exp != 0) s += "*x^" + std::to_string(exp);
  }
  return s;
}

// ---------------------------------------------------------------- SeriesTx

SeriesTx::SeriesTx(const GroundField& f, int tprec)
    : field_(f), tprec_(tprec), c_(static_cast<size_t>(std::max(tprec, 0)), FPoly(f)) {
  if (tprec <= 0) fail(ErrorCode::PrecisionExhausted, "t-precision exhausted");
}

SeriesTx SeriesTx::one(const GroundField& f, int tprec) {
  SeriesTx s(f, tprec);
  s.c_[0] = FPoly::constant(FieldElem::one(f));
  return s;
}

SeriesTx SeriesTx::from_poly(const FPoly& p, int tprec) {
  SeriesTx s(p.field(), tprec);
  s.c_[0] = p;
  return s;
}

const FPoly& SeriesTx::level(int i) const {
  if (i < 0 || i >= tprec_) fail(ErrorCode::Internal, "t-level out of range");
  return c_[static_cast<size_t>(i)];
}

void SeriesTx::set_level(int i, const FPoly& p) {
  if (i < 0 || i >= tprec_) fail(ErrorCode::Internal, "t-level out of range");
  if (p.field() != field_) fail(ErrorCode::FieldMismatch, "level over wrong field");
  c_[static_cast<size_t>(i)] = p;
}

bool SeriesTx::is_zero() const {
  for (const auto& p : c_)
    if (!p.is_zero()) return false;
  return true;
}

bool SeriesTx::is_unit() const {
  return c_[0].is_constant() && !c_[0].is_zero();
}

int SeriesTx::t_valuation() const {
  for (int i = 0; i < tprec_; ++i)
    if (!c_[static_cast<size_t>(i)].is_zero()) return i;
  fail(ErrorCode::PrecisionExhausted, "zero at full t-precision");
}

void SeriesTx::check_compat(const SeriesTx& o) const {
  if (field_ != o.field_)
    fail(ErrorCode::FieldMismatch, "series over different ground fields");
}

SeriesTx SeriesTx::operator+(const SeriesTx& o) const {
  check_compat(o);
  SeriesTx r(field_, std::min(tprec_, o.tprec_));
  for (int i = 0; i < r.tprec_; ++i) r.c_[static_cast<size_t>(i)] = level(i) + o.level(i);
  return r;
}

SeriesTx SeriesTx::operator-(const SeriesTx& o) const { return *this + (-o); }

SeriesTx SeriesTx::operator-() const {
  SeriesTx r = *this;
  for (auto& p : r.c_) p = -p;
  return r;
}

SeriesTx SeriesTx::operator*(const SeriesTx& o) const {
  check_compat(o);
  SeriesTx r(field_, std::min(tprec_, o.tprec_));
  for (int i = 0; i < r.tprec_; ++i)
    for (int j = 0; i + j < r.tprec_; ++j) {
      if (i >= tprec_ || j >= o.tprec_) continue;
      r.c_[static_cast<size_t>(i + j)] =
          r.c_[static_cast<size_t>(i + j)] + level(i) * o.level(j);
    }
  return r;
}

SeriesTx SeriesTx::invert_unit() const {
  if (!is_unit())
    fail(ErrorCode::NotAUnit,
         "T<x> unit predicate failed: t^0 coefficient must be a nonzero constant");
  SeriesTx b(field_, tprec_);
  FieldElem u0inv = c_[0].coeff(0).inverse();
  b.c_[0] = FPoly::constant(u0inv);
  for (int i = 1; i < tprec_; ++i) {
    FPoly acc(field_);
    for (int j = 1; j <= i; ++j) acc = acc + level(j) * b.level(i - j);
    b.c_[static_cast<size_t>(i)] = (-acc).scaled(u0inv);
  }
  return b;
}

SeriesTx SeriesTx::mul_tpow(int k) const {
  if (k < 0) return div_tpow(-k);
  SeriesTx r(field_, tprec_ + k);  // t^k * f is known mod t^{tprec+k}
  for (int i = 0; i < tprec_; ++i) r.c_[static_cast<size_t>(i + k)] = level(i);
  return r;
}

SeriesTx SeriesTx::div_tpow(int k) const {
  if (k == 0) return *this;
  if (k < 0) return mul_tpow(-k);
  for (int i = 0; i < std::min(k, tprec_); ++i)
    if (!level(i).is_zero())
      fail(ErrorCode::Internal, "inexact division by t^k");
  SeriesTx r(field_, tprec_ - k);  // throws PrecisionExhausted if nothing left
  for (int i = 0; i < r.tprec_; ++i) r.c_[static_cast<size_t>(i)] = level(i + k);
  return r;
}

SeriesTx SeriesTx::truncated_t(int k) const {
  SeriesTx r(field_, std::min(k, tprec_));
  for (int i = 0; i < r.tprec_; ++i) r.c_[static_cast<size_t>(i)] = level(i);
  return r;
}

bool SeriesTx::operator==(const SeriesTx& o) const {
  if (field_ != o.field_ || tprec_ != o.tprec_) return false;
  return c_ == o.c_;
}

bool SeriesTx::equal_at_precision(const SeriesTx& o) const {
  if (field_ != o.field_) return false;
  int n = std::min(tprec_, o.tprec_);
  for (int i = 0; i < n; ++i)
    if (level(i) != o.level(i)) return false;
  return true;
}

std::string SeriesTx::str() const {
  std::string s;
  for (int i = 0; i < tprec_; ++i) {
    if (level(i).is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + level(i).str() + ")";
    if (i > 0) s += "*t^" + std::to_string(i);
  }
  if (s.empty()) s = "0";
  return s + " + O(t^" + std::to_string(tprec_) + ")";
}

// ---------------------------------------------------------------- SeriesTTx

SeriesTTx::SeriesTTx(const GroundField& f, int tprec, int xprec)
    : field_(f), tprec_(tprec), xprec_(xprec),
      c_(static_cast<size_t>(std::max(tprec, 0)), FPoly(f)) {
  if (tprec <= 0 || xprec <= 0)
    fail(ErrorCode::PrecisionExhausted, "precision exhausted");
}

SeriesTTx SeriesTTx::one(const GroundField& f, int tprec, int xprec) {
  SeriesTTx s(f, tprec, xprec);
  s.c_[0] = FPoly::constant(FieldElem::one(f));
  return s;
}

SeriesTTx SeriesTTx::from_poly(const FPoly& p, int tprec, int xprec) {
  SeriesTTx s(p.field(), tprec, xprec);
  s.c_[0] = p.truncated(xprec);
  return s;
}

const FPoly& SeriesTTx::level(int i) const {
  if (i < 0 || i >= tprec_) fail(ErrorCode::Internal, "t-level out of range");
  return c_[static_cast<size_t>(i)];
}

void SeriesTTx::set_level(int i, const FPoly& p) {
  if (i < 0 || i >= tprec_) fail(ErrorCode::Internal, "t-level out of range");
  if (p.field() != field_) fail(ErrorCode::FieldMismatch, "level over wrong field");
  c_[static_cast<size_t>(i)] = p.truncated(xprec_);
}

bool SeriesTTx::is_zero() const {
  for (const auto& p : c_)
    if (!p.is_zero()) return false;
  return true;
}

bool SeriesTTx::is_unit() const { return !c_[0].coeff(0).is_zero(); }

int SeriesTTx::t_valuation() const {
  for (int i = 0; i < tprec_; ++i)
    if (!c_[static_cast<size_t>(i)].is_zero()) return i;
  fail(ErrorCode::PrecisionExhausted, "zero at full t-precision");
}

void SeriesTTx::check_compat(const SeriesTTx& o) const {
  if (field_ != o.field_)
    fail(ErrorCode::FieldMismatch, "series over different ground fields");
}

SeriesTTx SeriesTTx::operator+(const SeriesTTx& o) const {
  check_compat(o);
  SeriesTTx r(field_, std::min(tprec_, o.tprec_), std::min(xprec_, o.xprec_));
  for (int i = 0; i < r.tprec_; ++i)
    r.c_[static_cast<size_t>(i)] = (level(i) + o.level(i)).truncated(r.xprec_);
  return r;
}

SeriesTTx SeriesTTx::operator-(const SeriesTTx& o) const { return *this + (-o); }

SeriesTTx SeriesTTx::operator-() const {
  SeriesTTx r = *this;
  for (auto& p : r.c_) p = -p;
  return r;
}

SeriesTTx SeriesTTx::operator*(const SeriesTTx& o) const {
  check_compat(o);
  SeriesTTx r(field_, std::min(tprec_, o.tprec_), std::min(xprec_, o.xprec_));
  for (int i = 0; i < r.tprec_ && i < tprec_; ++i)
    for (int j = 0; i + j < r.tprec_ && j < o.tprec_; ++j)
      r.c_[static_cast<size_t>(i + j)] =
          (r.c_[static_cast<size_t>(i + j)] + level(i) * o.level(j)).truncated(r.xprec_);
  return r;
}

SeriesTTx SeriesTTx::invert_unit() const {
  if (!is_unit())
    fail(ErrorCode::NotAUnit,
         "T[[x]] unit predicate failed: constant coefficient a_{0,0} must be nonzero");
  SeriesTTx b(field_, tprec_, xprec_);
  FPoly b0 = c_[0].series_inverse(xprec_);
  b.c_[0] = b0;
  for (int i = 1; i < tprec_; ++i) {
    FPoly acc(field_);
    for (int j = 1; j <= i; ++j) acc = (acc + level(j) * b.level(i - j)).truncated(xprec_);
    b.c_[static_cast<size_t>(i)] = ((-acc) * b0).truncated(xprec_);
  }
  return b;
}

SeriesTTx SeriesTTx::mul_tpow(int k) const {
  if (k < 0) return div_tpow(-k);
  SeriesTTx r(field_, tprec_ + k, xprec_);
  for (int i = 0; i < tprec_; ++i) r.c_[static_cast<size_t>(i + k)] = level(i);
  return r;
}

SeriesTTx SeriesTTx::div_tpow(int k) const {
  if (k == 0) return *this;
  if (k < 0) return mul_tpow(-k);
  for (int i = 0; i < std::min(k, tprec_); ++i)
    if (!level(i).is_zero()) fail(ErrorCode::Internal, "inexact division by t^k");
  SeriesTTx r(field_, tprec_ - k, xprec_);
  for (int i = 0; i < r.tprec_; ++i) r.c_[static_cast<size_t>(i)] = level(i + k);
  return r;
}

SeriesTTx SeriesTTx::truncated_t(int k) const {
  SeriesTTx r(field_, std::min(k, tprec_), xprec_);
  for (int i = 0; i < r.tprec_; ++i) r.c_[static_cast<size_t>(i)] = level(i);
  return r;
}

bool SeriesTTx::operator==(const SeriesTTx& o) const {
  return field_ == o.field_ && tprec_ == o.tprec_ && xprec_ == o.xprec_ && c_ == o.c_;
}

bool SeriesTTx::equal_at_precision(const SeriesTTx& o) const {
  if (field_ != o.field_) return false;
  int nt = std::min(tprec_, o.tprec_), nx = std::min(xprec_, o.xprec_);
  for (int i = 0; i < nt; ++i)
    if (level(i).truncated(nx) != o.level(i).truncated(nx)) return false;
  return true;
}

std::string SeriesTTx::str() const {
  std::string s;
  for (int i = 0; i < tprec_; ++i) {
    if (level(i).is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + level(i).str() + ")";
    if (i > 0) s += "*t^" + std::to_string(i);
  }
  if (s.empty()) s = "0";
  return s + " + O(t^" + std::to_string(tprec_) + ", x^" + std::to_string(xprec_) + ")";
}

// ------------------------------------------------------------ SeriesLaurentT

SeriesLaurentT::SeriesLaurentT(const GroundField& f, int tprec, int xprec, int mx)
    : field_(f), tprec_(tprec), mx_(mx),
      c_(static_cast<size_t>(std::max(tprec, 0)), LaurentPoly(f, xprec)) {
  if (tprec <= 0) fail(ErrorCode::PrecisionExhausted, "t-precision exhausted");
}

SeriesLaurentT SeriesLaurentT::one(const GroundField& f, int tprec, int xprec, int mx) {
  SeriesLaurentT s(f, tprec, xprec, mx);
  s.c_[0] = LaurentPoly::monomial(FieldElem::one(f), 0, xprec);
  return s;
}

SeriesLaurentT SeriesLaurentT::from_laurent(const LaurentPoly& p, int tprec, int mx) {
  SeriesLaurentT s(p.field(), tprec, p.xprec(), mx);
  s.c_[0] = p;
  return s;
}

int SeriesLaurentT::xprec() const {
  int n = c_[0].xprec();
  for (const auto& p : c_) n = std::min(n, p.xprec());
  return n;
}

const LaurentPoly& SeriesLaurentT::level(int i) const {
  if (i < 0 || i >= tprec_) fail(ErrorCode::Internal, "t-level out of range");
  return c_[static_cast<size_t>(i)];
}

void SeriesLaurentT::set_level(int i, const LaurentPoly& p) {
  if (i < 0 || i >= tprec_) fail(ErrorCode::Internal, "t-level out of range");
  if (p.field() != field_) fail(ErrorCode::FieldMismatch, "level over wrong field");
  c_[static_cast<size_t>(i)] = p;
}

bool SeriesLaurentT::is_zero() const {
  for (const auto& p : c_)
    if (!p.is_zero()) return false;
  return true;
}

bool SeriesLaurentT::is_unit() const { return !c_[0].is_zero(); }

int SeriesLaurentT::t_valuation() const {
  for (int i = 0; i < tprec_; ++i)
    if (!c_[static_cast<size_t>(i)].is_zero()) return i;
  fail(ErrorCode::PrecisionExhausted, "zero at full t-precision");
}

bool SeriesLaurentT::in_p_side() const {
  for (const auto& p : c_)
    if (!p.is_p_side()) return false;
  return true;
}

bool SeriesLaurentT::in_u_side() const {
  for (const auto& p : c_)
    if (!p.is_u_side()) return false;
  return true;
}

void SeriesLaurentT::check_compat(const SeriesLaurentT& o) const {
  if (field_ != o.field_)
    fail(ErrorCode::FieldMismatch, "series over different ground fields");
}

SeriesLaurentT SeriesLaurentT::operator+(const SeriesLaurentT& o) const {
  check_compat(o);
  SeriesLaurentT r(field_, std::min(tprec_, o.tprec_), xprec(), std::min(mx_, o.mx_));
  for (int i = 0; i < r.tprec_; ++i) r.c_[static_cast<size_t>(i)] = level(i) + o.level(i);
  return r;
}

SeriesLaurentT SeriesLaurentT::operator-(const SeriesLaurentT& o) const {
  return *this + (-o);
}

SeriesLaurentT SeriesLaurentT::operator-() const {
  SeriesLaurentT r = *this;
  for (auto& p : r.c_) p = -p;
  return r;
}

SeriesLaurentT SeriesLaurentT::operator*(const SeriesLaurentT& o) const {
  check_compat(o);
  SeriesLaurentT r(field_, std::min(tprec_, o.tprec_), xprec(), std::min(mx_, o.mx_));
  for (int i = 0; i < r.tprec_; ++i) {
    LaurentPoly acc(field_, std::min(xprec(), o.xprec()));
    bool any = false;
    for (int j = 0; j <= i; ++j) {
      if (j >= tprec_ || i - j >= o.tprec_) continue;
      LaurentPoly term = level(j) * o.level(i - j);
      acc = any ? acc + term : term;
      any = true;
    }
    r.c_[static_cast<size_t>(i)] = acc;
  }
  return r;
}

SeriesLaurentT SeriesLaurentT::invert_unit() const {
  if (!is_unit())
    fail(ErrorCode::NotAUnit,
         "k((x^-1))[[t]] unit predicate failed: t^0 coefficient is zero within the window");
  SeriesLaurentT b(field_, tprec_, xprec(), mx_);
  LaurentPoly b0 = c_[0].inverse();
  b.c_[0] = b0;
  for (int i = 1; i < tprec_; ++i) {
    LaurentPoly acc(field_, b0.xprec());
    for (int j = 1; j <= i; ++j) acc = acc + level(j) * b.level(i - j);
    b.c_[static_cast<size_t>(i)] = (-acc) * b0;
  }
  return b;
}

SeriesLaurentT SeriesLaurentT::mul_tpow(int k) const {
  if (k < 0) return div_tpow(-k);
  SeriesLaurentT r(field_, tprec_ + k, xprec(), mx_);
  for (int i = 0; i < tprec_; ++i) r.c_[static_cast<size_t>(i + k)] = level(i);
  return r;
}

SeriesLaurentT SeriesLaurentT::div_tpow(int k) const {
  if (k == 0) return *this;
  if (k < 0) return mul_tpow(-k);
  for (int i = 0; i < std::min(k, tprec_); ++i)
    if (!level(i).is_zero()) fail(ErrorCode::Internal, "inexact division by t^k");
  SeriesLaurentT r(field_, tprec_ - k, xprec(), mx_);
  for (int i = 0; i < r.tprec_; ++i) r.c_[static_cast<size_t>(i)] = level(i + k);
  return r;
}

SeriesLaurentT SeriesLaurentT::truncated_t(int k) const {
  SeriesLaurentT r(field_, std::min(k, tprec_), xprec(), mx_);
  for (int i = 0; i < r.tprec_; ++i) r.c_[static_cast<size_t>(i)] = level(i);
  return r;
}

bool SeriesLaurentT::operator==(const SeriesLaurentT& o) const {
  if (field_ != o.field_ || tprec_ != o.tprec_) return false;
  for (int i = 0; i < tprec_; ++i)
    if (!(level(i) == o.level(i))) return false;
  return true;
}

bool SeriesLaurentT::equal_at_precision(const SeriesLaurentT& o) const {
  if (field_ != o.field_) return false;
  int nt = std::min(tprec_, o.tprec_);
  for (int i = 0; i < nt; ++i) {
    LaurentPoly d = level(i) - o.level(i);
    if (d.is_zero()) continue;
    // disagreement only below the common validity floor is not a
    // disagreement at precision
    if (d.low_exponent() >= -d.valid_floor()) return false;
  }
  return true;
}

std::string SeriesLaurentT::str() const {
  std::string s;
  for (int i = 0; i < tprec_; ++i) {
    if (level(i).is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + level(i).str() + ")";
    if (i > 0) s += "*t^" + std::to_string(i);
  }
  if (s.empty()) s = "0";
  return s + " + O(t^" + std::to_string(tprec_) + ")";
}

// ---------------------------------------------------------------- SeriesXY

SeriesXY::SeriesXY(const GroundField& f, int deg)
    : field_(f), deg_(deg), c_(static_cast<size_t>(std::max(deg, 0)), FPoly(f)) {
  if (deg <= 0) fail(ErrorCode::PrecisionExhausted, "total-degree window exhausted");
}

SeriesXY SeriesXY::one(const GroundField& f, int deg) {
  SeriesXY s(f, deg);
  s.c_[0] = FPoly::constant(FieldElem::one(f));
  return s;
}

SeriesXY SeriesXY::from_x_poly(const FPoly& p, int deg) {
  SeriesXY s(p.field(), deg);
  s.c_[0] = p.truncated(deg);
  return s;
}

SeriesXY SeriesXY::y_monomial(const GroundField& f, int b, int deg) {
  SeriesXY s(f, deg);
  if (b < deg) s.c_[static_cast<size_t>(b)] = FPoly::constant(FieldElem::one(f));
  return s;
}

int SeriesXY::y_degree() const {
  for (int b = deg_ - 1; b >= 0; --b)
    if (!c_[static_cast<size_t>(b)].is_zero()) return b;
  return -1;
}

const FPoly& SeriesXY::ycoeff(int b) const {
  if (b < 0 || b >= deg_) fail(ErrorCode::Internal, "y-degree out of window");
  return c_[static_cast<size_t>(b)];
}

void SeriesXY::set_ycoeff(int b, const FPoly& p) {
  if (b < 0 || b >= deg_) fail(ErrorCode::Internal, "y-degree out of window");
  if (p.field() != field_) fail(ErrorCode::FieldMismatch, "coefficient over wrong field");
  c_[static_cast<size_t>(b)] = p.truncated(deg_ - b);
}

FieldElem SeriesXY::coeff(int a, int b) const {
  if (b < 0 || b >= deg_) return FieldElem::zero(field_);
  return c_[static_cast<size_t>(b)].coeff(a);
}

bool SeriesXY::is_zero() const {
  for (const auto& p : c_)
    if (!p.is_zero()) return false;
  return true;
}

bool SeriesXY::is_unit() const { return !c_[0].coeff(0).is_zero(); }

void SeriesXY::check_compat(const SeriesXY& o) const {
  if (field_ != o.field_)
    fail(ErrorCode::FieldMismatch, "series over different ground fields");
}

SeriesXY SeriesXY::operator+(const SeriesXY& o) const {
  check_compat(o);
  SeriesXY r(field_, std::min(deg_, o.deg_));
  for (int b = 0; b < r.deg_; ++b)
    r.set_ycoeff(b, ycoeff(b) + o.ycoeff(b));
  return r;
}

SeriesXY SeriesXY::operator-(const SeriesXY& o) const { return *this + (-o); }

SeriesXY SeriesXY::operator-() const {
  SeriesXY r = *this;
  for (auto& p : r.c_) p = -p;
  return r;
}

SeriesXY SeriesXY::operator*(const SeriesXY& o) const {
  check_compat(o);
  SeriesXY r(field_, std::min(deg_, o.deg_));
  for (int b1 = 0; b1 < deg_ && b1 < r.deg_; ++b1) {
    if (c_[static_cast<size_t>(b1)].is_zero()) continue;
    for (int b2 = 0; b2 < o.deg_ && b1 + b2 < r.deg_; ++b2) {
      if (o.c_[static_cast<size_t>(b2)].is_zero()) continue;
      int b = b1 + b2;
      r.set_ycoeff(b, r.ycoeff(b) + c_[static_cast<size_t>(b1)] * o.c_[static_cast<size_t>(b2)]);
    }
  }
  return r;
}

SeriesXY SeriesXY::invert_unit() const {
  if (!is_unit())
    fail(ErrorCode::NotAUnit,
         "k[[x,y]] unit predicate failed: constant term is zero");
  FieldElem c0 = c_[0].coeff(0);
  SeriesXY v = *this;
  for (auto& p : v.c_) p = p.scaled(c0.inverse());
  SeriesXY m = one(field_, deg_) - v;  // total order >= 1
  SeriesXY acc = one(field_, deg_);
  SeriesXY term = one(field_, deg_);
  for (int k = 1; k < deg_; ++k) {
    term = term * m;
    if (term.is_zero()) break;
    acc = acc + term;
  }
  for (auto& p : acc.c_) p = p.scaled(c0.inverse());
  return acc;
}

bool SeriesXY::operator==(const SeriesXY& o) const {
  return field_ == o.field_ && deg_ == o.deg_ && c_ == o.c_;
}

bool SeriesXY::equal_at_precision(const SeriesXY& o) const {
  if (field_ != o.field_) return false;
  int d = std::min(deg_, o.deg_);
  for (int b = 0; b < d; ++b)
    if (ycoeff(b).truncated(d - b) != o.ycoeff(b).truncated(d - b)) return false;
  return true;
}

int SeriesXY::order() const {
  int best = -1;
  for (int b = 0; b < deg_; ++b) {
    const FPoly& p = c_[static_cast<size_t>(b)];
    if (p.is_zero()) continue;
    int tot = p.x_order() + b;
    if (best < 0 || tot < best) best = tot;
  }
  return best;
}

std::vector<FieldElem> SeriesXY::form(int d) const {
  // index j: coefficient of x^{d-j} y^j
  std::vector<FieldElem> f(static_cast<size_t>(d) + 1, FieldElem::zero(field_));
  for (int j = 0; j <= d; ++j) f[static_cast<size_t>(j)] = coeff(d - j, j);
  return f;
}

SeriesXY SeriesXY::dy() const {
  SeriesXY r(field_, deg_);
  for (int b = 1; b < deg_; ++b)
    r.set_ycoeff(b - 1, c_[static_cast<size_t>(b)].scaled(FieldElem::from_integer(field_, b)));
  return r;
}

FPoly SeriesXY::eval_y(const FPoly& phi) const {
  FPoly acc(field_);
  for (int b = y_degree(); b >= 0; --b)
    acc = ((acc * phi) + c_[static_cast<size_t>(b)]).truncated(deg_);
  return acc;
}

std::vector<FPoly> SeriesXY::eps_expansion(const FPoly& phi, int depth) const {
  // Horner in y with y := phi + eps; acc holds coefficients of eps^j.
  std::vector<FPoly> acc(static_cast<size_t>(depth), FPoly(field_));
  for (int b = y_degree(); b >= 0; --b) {
    std::vector<FPoly> next(static_cast<size_t>(depth), FPoly(field_));
    for (int j = 0; j < depth; ++j) {
      FPoly v = (acc[static_cast<size_t>(j)] * phi).truncated(deg_);
      if (j > 0) v = v + acc[static_cast<size_t>(j) - 1];
      next[static_cast<size_t>(j)] = v.truncated(deg_);
    }
    next[0] = (next[0] + c_[static_cast<size_t>(b)]).truncated(deg_);
    acc = std::move(next);
  }
  // eps carries total degree one: the eps^j coefficient is only valid
  // mod x^{deg - j}
  for (int j = 0; j < depth; ++j)
    acc[static_cast<size_t>(j)] = acc[static_cast<size_t>(j)].truncated(deg_ - j);
  return acc;
}

std::pair<SeriesXY, FPoly> SeriesXY::div_y_linear(const FPoly& phi) const {
  SeriesXY q(field_, deg_);
  int yd = y_degree();
  FPoly carry(field_);
  for (int b = yd; b >= 1; --b) {
    FPoly h = (c_[static_cast<size_t>(b)] + (carry * phi)).truncated(deg_);
    q.set_ycoeff(b - 1, h);
    carry = h;
  }
  FPoly r = (c_[0] + carry * phi).truncated(deg_);
  return {q, r};
}

std::string SeriesXY::str() const {
  std::string s;
  for (int b = 0; b < deg_; ++b) {
    if (c_[static_cast<size_t>(b)].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + c_[static_cast<size_t>(b)].str() + ")";
    if (b > 0) s += "*y^" + std::to_string(b);
  }
  if (s.empty()) s = "0";
  return s + " + O(deg " + std::to_string(deg_) + ")";
}

// ------------------------------------------------------------ GlobalElement

GlobalElement::GlobalElement(SeriesTx n, SeriesTx d)
    : num(std::move(n)), den(std::move(d)) {
  if (den.is_zero())
    fail(ErrorCode::PrecisionExhausted, "global element with zero denominator at precision");
}

// ---------------------------------------------------------------- PolyOverT

PolyOverT::PolyOverT(const GroundField& f, int tprec) : field_(f), tprec_(tprec) {
  if (tprec <= 0) fail(ErrorCode::PrecisionExhausted, "t-precision exhausted");
}

PolyOverT PolyOverT::from_x_poly(const FPoly& p, int tprec) {
  PolyOverT r(p.field(), tprec);
  for (int j = 0; j <= p.degree(); ++j)
    r.set_xcoeff(j, FPoly::constant(p.coeff(j)));
  return r;
}

void PolyOverT::trim() {
  while (!cx_.empty() && cx_.back().is_zero()) cx_.pop_back();
}

bool PolyOverT::is_monic() const {
  if (cx_.empty()) return false;
  const FPoly& top = cx_.back();
  return top.is_constant() && top.coeff(0).is_one();
}

FPoly PolyOverT::xcoeff(int j) const {
  if (j < 0 || j >= static_cast<int>(cx_.size())) return FPoly(field_);
  return cx_[static_cast<size_t>(j)];
}

void PolyOverT::set_xcoeff(int j, const FPoly& ts) {
  if (j < 0) fail(ErrorCode::Internal, "negative x-degree");
  if (ts.field() != field_) fail(ErrorCode::FieldMismatch, "coefficient over wrong field");
  if (j >= static_cast<int>(cx_.size()))
    cx_.resize(static_cast<size_t>(j) + 1, FPoly(field_));
  cx_[static_cast<size_t>(j)] = ts.truncated(tprec_);
  trim();
}

FieldElem PolyOverT::coeff(int j, int i) const {
  if (j < 0 || j >= static_cast<int>(cx_.size())) return FieldElem::zero(field_);
  return cx_[static_cast<size_t>(j)].coeff(i);
}

FPoly PolyOverT::mod_t() const {
  FPoly p(field_);
  for (int j = 0; j < static_cast<int>(cx_.size()); ++j)
    p.set_coeff(j, cx_[static_cast<size_t>(j)].coeff(0));
  return p;
}

SeriesTx PolyOverT::to_series_tx() const {
  SeriesTx s(field_, tprec_);
  for (int i = 0; i < tprec_; ++i) {
    FPoly lvl(field_);
    for (int j = 0; j < static_cast<int>(cx_.size()); ++j)
      lvl.set_coeff(j, coeff(j, i));
    s.set_level(i, lvl);
  }
  return s;
}

SeriesTTx PolyOverT::to_series_ttx(int xprec) const {
  SeriesTTx s(field_, tprec_, xprec);
  for (int i = 0; i < tprec_; ++i) {
    FPoly lvl(field_);
    for (int j = 0; j < static_cast<int>(cx_.size()); ++j)
      lvl.set_coeff(j, coeff(j, i));
    s.set_level(i, lvl);
  }
  return s;
}

SeriesLaurentT PolyOverT::to_series_laurent(int xprec, int mx) const {
  SeriesLaurentT s(field_, tprec_, xprec, mx);
  for (int i = 0; i < tprec_; ++i) {
    LaurentPoly lvl(field_, xprec);
    for (int j = 0; j < static_cast<int>(cx_.size()); ++j) {
      FieldElem v = coeff(j, i);
      if (!v.is_zero()) lvl.set_coeff(j, v);
    }
    s.set_level(i, lvl);
  }
  return s;
}

bool PolyOverT::operator==(const PolyOverT& o) const {
  return field_ == o.field_ && tprec_ == o.tprec_ && cx_ == o.cx_;
}

std::string PolyOverT::str() const {
  if (cx_.empty()) return "0";
  std::string s;
  for (int j = 0; j < static_cast<int>(cx_.size()); ++j) {
    if (cx_[static_cast<size_t>(j)].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + cx_[static_cast<size_t>(j)].str("t") + ")";
    if (j > 0) s += "*x^" + std::to_string(j);
  }
  return s;
}

PolyOverT poly_from_tx(const SeriesTx& s) {
  PolyOverT p(s.field(), s.tprec());
  int dmax = -1;
  for (int i = 0; i < s.tprec(); ++i) dmax = std::max(dmax, s.level(i).degree());
  for (int j = 0; j <= dmax; ++j) {
    FPoly ts(s.field());
    for (int i = 0; i < s.tprec(); ++i) ts.set_coeff(i, s.level(i).coeff(j));
    p.set_xcoeff(j, ts);
  }
  return p;
}

}  // namespace dvcurve
