#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace sumprodlab {

using BigInt = mpz_class;

// Arbitrary-precision rational kept in canonical reduced form:
// gcd(|numerator|, denominator) == 1, denominator >= 1, zero is 0/1.
// Equality and ordering are the exact rational ones; all arithmetic is
// exact. Immutable after construction, safe to share across threads.
class ExactScalar {
 public:
  ExactScalar() : value_(0) {}
  ExactScalar(long v) : value_(v) {}  // NOLINT: implicit by design
  explicit ExactScalar(const BigInt& v) : value_(v) {}
  // Throws std::domain_error on a zero denominator; canonicalizes.
  ExactScalar(const BigInt& numerator, const BigInt& denominator);

  // Accepts "p", "p/q", optionally signed, q may be non-canonical or
  // negative; throws std::invalid_argument on malformed text and
  // std::domain_error on q == 0.
  static ExactScalar parse(const std::string& text);

  // Canonical text: "p" when integral, "p/q" otherwise (q > 1).
  std::string str() const;

  BigInt num() const { return value_.get_num(); }
  BigInt den() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }
  double to_double() const { return value_.get_d(); }

  // The value as int64 if it is an integer in range, nullopt otherwise.
  std::optional<std::int64_t> as_int64() const;

  ExactScalar operator-() const;
  ExactScalar operator+(const ExactScalar& o) const;
  ExactScalar operator-(const ExactScalar& o) const;
  ExactScalar operator*(const ExactScalar& o) const;
  // Throws std::domain_error when dividing by zero.
  ExactScalar operator/(const ExactScalar& o) const;
  ExactScalar reciprocal() const;
  ExactScalar abs() const;

  bool operator==(const ExactScalar& o) const { return value_ == o.value_; }
  bool operator!=(const ExactScalar& o) const { return value_ != o.value_; }
  bool operator<(const ExactScalar& o) const { return cmp(value_, o.value_) < 0; }
  bool operator<=(const ExactScalar& o) const { return cmp(value_, o.value_) <= 0; }
  bool operator>(const ExactScalar& o) const { return cmp(value_, o.value_) > 0; }
  bool operator>=(const ExactScalar& o) const { return cmp(value_, o.value_) >= 0; }

 private:
  explicit ExactScalar(mpq_class q) : value_(std::move(q)) {}
  mpq_class value_;  // invariant: canonical
};

// Smallest integer >= x.
BigInt ceil_of(const ExactScalar& x);

std::ostream& operator<<(std::ostream& os, const ExactScalar& x);

}  // namespace sumprodlab
