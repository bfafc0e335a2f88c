#include "dvcurve/ground.hpp"

#include <cstdlib>

namespace dvcurve {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::NotASquareResidue: return "NotASquareResidue";
    case ErrorCode::BadResidue: return "BadResidue";
    case ErrorCode::CharDividesN: return "CharDividesN";
    case ErrorCode::CharTwo: return "CharTwo";
    case ErrorCode::NotDistinguished: return "NotDistinguished";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::WindowTooSmall: return "WindowTooSmall";
    case ErrorCode::NotSplitNode: return "NotSplitNode";
    case ErrorCode::ObstructionFails: return "ObstructionFails";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::RankZero: return "RankZero";
    case ErrorCode::UnknownBase: return "UnknownBase";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  // extended Euclid; a nonzero mod p
  std::int64_t t = 0, newt = 1, r = p, newr = a % p;
  if (newr < 0) newr += p;
  while (newr != 0) {
    std::int64_t q = r / newr;
    std::int64_t tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) fail(ErrorCode::NotAUnit, "no inverse mod p");
  if (t < 0) t += p;
  return t;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  // deterministic Miller-Rabin for 64-bit inputs
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

GroundField GroundField::prime_field(std::int64_t p) {
  if (p < 2 || !is_prime_u64(static_cast<std::uint64_t>(p)))
    fail(ErrorCode::ParseError, "field modulus " + std::to_string(p) + " is not prime");
  return GroundField(FieldKind::PrimeField, p);
}

std::string GroundField::str() const {
  return kind_ == FieldKind::Rationals ? "Q" : "F" + std::to_string(p_);
}

FieldElem FieldElem::from_integer(const GroundField& f, long long v) {
  FieldElem e;
  e.field_ = f;
  if (f.kind() == FieldKind::Rationals) {
    e.q_ = mpq_class(static_cast<long>(v));
  } else {
    std::int64_t r = v % f.prime();
    if (r < 0) r += f.prime();
    e.r_ = r;
    e.q_ = 0;
  }
  return e;
}

FieldElem FieldElem::from_ratio(const GroundField& f, long long num, long long den) {
  if (den == 0) fail(ErrorCode::ParseError, "zero denominator");
  if (f.kind() == FieldKind::Rationals) {
    FieldElem e;
    e.field_ = f;
    e.q_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
    e.q_.canonicalize();
    return e;
  }
  return from_integer(f, num) / from_integer(f, den);
}

FieldElem FieldElem::from_string(const GroundField& f, const std::string& s) {
  auto slash = s.find('/');
  FieldElem e;
  e.field_ = f;
  try {
    if (f.kind() == FieldKind::Rationals) {
      e.q_ = mpq_class(s);
      e.q_.canonicalize();
      if (e.q_.get_den() == 0) fail(ErrorCode::ParseError, "zero denominator");
    } else {
      mpz_class num(slash == std::string::npos ? s : s.substr(0, slash));
      mpz_class den(slash == std::string::npos ? std::string("1") : s.substr(slash + 1));
      mpz_class p(static_cast<long>(f.prime()));
      mpz_class nr = num % p;
      if (nr < 0) nr += p;
      mpz_class dr = den % p;
      if (dr < 0) dr += p;
      FieldElem n = from_integer(f, nr.get_si());
      FieldElem d = from_integer(f, dr.get_si());
      return n / d;
    }
  } catch (const std::invalid_argument&) {
    fail(ErrorCode::ParseError, "bad coefficient literal '" + s + "'");
  }
  return e;
}

bool FieldElem::is_zero() const {
  return field_.kind() == FieldKind::Rationals ? q_ == 0 : r_ == 0;
}

bool FieldElem::is_one() const {
  return field_.kind() == FieldKind::Rationals ? q_ == 1 : r_ == 1;
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  check_same_field(o);
  FieldElem e = *this;
  if (field_.kind() == FieldKind::Rationals) {
    e.q_ = q_ + o.q_;
  } else {
    e.r_ = r_ + o.r_;
    if (e.r_ >= field_.prime()) e.r_ -= field_.prime();
  }
  return e;
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
  check_same_field(o);
  FieldElem e = *this;
  if (field_.kind() == FieldKind::Rationals) {
    e.q_ = q_ - o.q_;
  } else {
    e.r_ = r_ - o.r_;
    if (e.r_ < 0) e.r_ += field_.prime();
  }
  return e;
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
  check_same_field(o);
  FieldElem e = *this;
  if (field_.kind() == FieldKind::Rationals) {
    e.q_ = q_ * o.q_;
  } else {
    e.r_ = static_cast<std::int64_t>(
        mulmod_u64(static_cast<std::uint64_t>(r_),
                   static_cast<std::uint64_t>(o.r_),
                   static_cast<std::uint64_t>(field_.prime())));
  }
  return e;
}

FieldElem FieldElem::operator/(const FieldElem& o) const {
  return *this * o.inverse();
}

FieldElem FieldElem::operator-() const {
  FieldElem e = *this;
  if (field_.kind() == FieldKind::Rationals) {
    e.q_ = -q_;
  } else if (r_ != 0) {
    e.r_ = field_.prime() - r_;
  }
  return e;
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) fail(ErrorCode::NotAUnit, "inverse of zero");
  FieldElem e = *this;
  if (field_.kind() == FieldKind::Rationals) {
    e.q_ = 1 / q_;
  } else {
    e.r_ = mod_inverse(r_, field_.prime());
  }
  return e;
}

FieldElem FieldElem::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElem acc = one(field_);
  FieldElem base = *this;
  long long k = e;
  while (k) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

std::optional<FieldElem> FieldElem::sqrt() const {
  if (is_zero()) return zero(field_);
  if (field_.kind() == FieldKind::Rationals) {
    if (q_ < 0) return std::nullopt;
    mpz_class num = q_.get_num(), den = q_.get_den();
    mpz_class sn, sd, rn, rd;
    mpz_sqrtrem(sn.get_mpz_t(), rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrtrem(sd.get_mpz_t(), rd.get_mpz_t(), den.get_mpz_t());
    if (rn != 0 || rd != 0) return std::nullopt;
    FieldElem e = *this;
    e.q_ = mpq_class(sn) / mpq_class(sd);
    e.q_.canonicalize();
    return e;
  }
  std::uint64_t p = static_cast<std::uint64_t>(field_.prime());
  std::uint64_t a = static_cast<std::uint64_t>(r_);
  if (p == 2) return *this;  // x^2 = x in F_2
  if (powmod_u64(a, (p - 1) / 2, p) != 1) return std::nullopt;
  // Tonelli-Shanks
  std::uint64_t q = p - 1;
  int s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  std::uint64_t root;
  if (s == 1) {
    root = powmod_u64(a, (p + 1) / 4, p);
  } else {
    std::uint64_t z = 2;
    while (powmod_u64(z, (p - 1) / 2, p) != p - 1) ++z;
    std::uint64_t m = s, c = powmod_u64(z, q, p);
    std::uint64_t t = powmod_u64(a, q, p);
    root = powmod_u64(a, (q + 1) / 2, p);
    while (t != 1) {
      std::uint64_t i = 0, tt = t;
      while (tt != 1) {
        tt = mulmod_u64(tt, tt, p);
        ++i;
      }
      std::uint64_t b = c;
      for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = mulmod_u64(b, b, p);
      m = i;
      c = mulmod_u64(b, b, p);
      t = mulmod_u64(t, c, p);
      root = mulmod_u64(root, b, p);
    }
  }
  FieldElem e = *this;
  e.r_ = static_cast<std::int64_t>(root);
  return e;
}

bool FieldElem::operator==(const FieldElem& o) const {
  if (field_ != o.field_) return false;
  return field_.kind() == FieldKind::Rationals ? q_ == o.q_ : r_ == o.r_;
}

std::string FieldElem::str() const {
  if (field_.kind() == FieldKind::Rationals) return q_.get_str();
  return std::to_string(r_);
}

}  // namespace dvcurve
