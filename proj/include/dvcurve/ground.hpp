#ifndef DVCURVE_GROUND_HPP
#define DVCURVE_GROUND_HPP

#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "dvcurve/errors.hpp"

namespace dvcurve {

enum class FieldKind { Rationals, PrimeField };

// Ground field of coefficients: either Q (exact arbitrary-precision
// rationals) or F_p for a prime p.  All arithmetic is exact; there is no
// floating point anywhere in the library.
class GroundField {
 public:
  static GroundField rationals() { return GroundField(FieldKind::Rationals, 0); }
  static GroundField prime_field(std::int64_t p);

  FieldKind kind() const { return kind_; }
  std::int64_t prime() const { return p_; }
  std::int64_t characteristic() const {
    return kind_ == FieldKind::Rationals ? 0 : p_;
  }

  bool operator==(const GroundField& o) const {
    return kind_ == o.kind_ && p_ == o.p_;
  }
  bool operator!=(const GroundField& o) const { return !(*this == o); }

  std::string str() const;

 private:
  GroundField(FieldKind k, std::int64_t p) : kind_(k), p_(p) {}
  FieldKind kind_;
  std::int64_t p_;
};

bool is_prime_u64(std::uint64_t n);

// One exact coefficient.  Rationals are kept canonical (lowest terms,
// positive denominator); prime-field residues live in [0, p).
class FieldElem {
 public:
  FieldElem() : field_(GroundField::rationals()), q_(0), r_(0) {}

  static FieldElem zero(const GroundField& f) { return from_integer(f, 0); }
  static FieldElem one(const GroundField& f) { return from_integer(f, 1); }
  static FieldElem from_integer(const GroundField& f, long long v);
  static FieldElem from_ratio(const GroundField& f, long long num, long long den);
  // Accepts "n" or "n/d" (decimal).
  static FieldElem from_string(const GroundField& f, const std::string& s);

  const GroundField& field() const { return field_; }

  bool is_zero() const;
  bool is_one() const;

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator/(const FieldElem& o) const;
  FieldElem operator-() const;
  FieldElem inverse() const;  // NotAUnit on zero
  FieldElem pow(long long e) const;

  // Square root if one exists in the field (exact for Q, Tonelli-Shanks
  // for F_p).
  std::optional<FieldElem> sqrt() const;

  bool operator==(const FieldElem& o) const;
  bool operator!=(const FieldElem& o) const { return !(*this == o); }

  // Canonical form: "n" or "n/d" with gcd(n,d) = 1, d > 0.
  std::string str() const;

  // Rational value; only valid for the rational field.
  const mpq_class& rational() const { return q_; }
  std::int64_t residue() const { return r_; }

 private:
  void check_same_field(const FieldElem& o) const {
    if (field_ != o.field_)
      fail(ErrorCode::FieldMismatch,
           "operands over " + field_.str() + " and " + o.field_.str());
  }

  GroundField field_;
  mpq_class q_;       // Rationals
  std::int64_t r_;    // PrimeField residue in [0, p)
};

}  // namespace dvcurve

#endif
