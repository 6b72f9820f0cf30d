#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace stratakit::la {

class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Ground field: a prime field GF(p) or the rationals.
class Field {
 public:
  enum class Kind { Prime, Rational };

  static Field gf(std::int64_t p);
  static Field rationals() { return Field(Kind::Rational, 0); }

  Kind kind() const { return kind_; }
  bool is_prime() const { return kind_ == Kind::Prime; }
  bool is_rational() const { return kind_ == Kind::Rational; }
  std::int64_t characteristic() const { return p_; }

  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  Field(Kind k, std::int64_t p) : kind_(k), p_(p) {}

  Kind kind_;
  std::int64_t p_;
};

/// A field element tagged with its field.  GF(p) values are kept in [0, p).
class Scalar {
 public:
  Scalar() : field_(Field::gf(2)) {}
  Scalar(const Field& f, std::int64_t v);
  Scalar(const Field& f, const mpq_class& v);

  static Scalar zero(const Field& f) { return Scalar(f, 0); }
  static Scalar one(const Field& f) { return Scalar(f, 1); }
  /// Parses "3", "-2", "3/4" (the latter only over Q or when the
  /// denominator is invertible mod p).
  static Scalar parse(const Field& f, const std::string& text);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  std::int64_t residue() const { return g_; }
  const mpq_class& rational() const { return q_; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  Field field_;
  std::int64_t g_ = 0;
  mpq_class q_;
};

std::int64_t mod_inverse(std::int64_t a, std::int64_t p);
bool is_prime(std::int64_t n);

}  // namespace stratakit::la
