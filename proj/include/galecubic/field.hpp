#pragma once

// Exact coefficient fields: the rationals, prime fields F_p, and the order-3
// cyclotomic extension of either. Elements carry a pointer to an interned,
// immutable Field descriptor so that fields can be chosen at run time.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace galecubic {

class Scalar;

/// Thrown for malformed input (bad field descriptors, shape mismatches, ...).
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Field {
 public:
  enum class Base { Rational, Prime };

  static const Field& rationals();
  /// F_p; p must be prime.
  static const Field& prime(std::int64_t p);
  /// Q(xi) or F_p(xi) with xi^2 + xi + 1 = 0. Over F_p with p = 1 mod 3 this
  /// returns F_p itself (xi is a ground-field element, the smaller root).
  static const Field& cyclotomic3(const Field& base);
  /// "rational", "prime:97", "cyclo3:rational", "cyclo3:prime:5".
  static const Field& parse(const std::string& descriptor);

  Base base() const { return base_; }
  bool is_rational_base() const { return base_ == Base::Rational; }
  std::int64_t characteristic() const { return p_; }
  /// True when elements are pairs a + b*xi (a genuine quadratic extension).
  bool is_extension() const { return extension_; }
  /// True when the descriptor asked for a cube root of unity.
  bool has_xi() const { return has_xi_; }
  /// Number of elements; nullopt for characteristic zero.
  std::optional<std::int64_t> order() const;
  std::string descriptor() const { return descriptor_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long v) const;
  Scalar from_rational(const mpq_class& q) const;
  /// Primitive cube root of unity; throws if the field has none.
  Scalar xi() const;
  /// Both roots of x^2+x+1 in F_p (p = 1 mod 3), ascending.
  std::vector<std::int64_t> xi_roots() const { return xi_roots_; }

  bool operator==(const Field& o) const { return this == &o; }
  bool operator!=(const Field& o) const { return this != &o; }

 private:
  Field() = default;
  Base base_ = Base::Rational;
  std::int64_t p_ = 0;
  bool extension_ = false;
  bool has_xi_ = false;
  std::vector<std::int64_t> xi_roots_;
  std::string descriptor_;
  friend struct FieldRegistry;
};

bool is_prime(std::int64_t n);

/// An element of a Field. Value type; the default-constructed scalar is the
/// rational zero.
class Scalar {
 public:
  using Coord = std::variant<std::int64_t, mpq_class>;

  Scalar();
  Scalar(const Field& f, Coord a, Coord b);

  const Field& field() const { return *field_; }

  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar inverse() const;
  Scalar pow(std::uint64_t e) const;
  /// A square root in the same field, if one exists.
  std::optional<Scalar> sqrt() const;

  /// Rational value (requires rational base, non-extension or b = 0).
  mpq_class to_rational() const;
  /// Residue in [0, p) (requires prime base, non-extension or b = 0).
  std::int64_t to_residue() const;
  /// Component access: value = a + b*xi.
  const Coord& a() const { return a_; }
  const Coord& b() const { return b_; }

  /// Human-readable form ("3/4", "17", "2+5*xi").
  std::string str() const;
  /// Total order used only for canonical forms (not field-theoretic).
  bool canonical_less(const Scalar& o) const;

 private:
  struct RawTag {};
  Scalar(RawTag, const Field& f) : field_(&f) {}
  static Scalar raw(const Field& f) { return Scalar(RawTag{}, f); }

  const Field* field_;
  Coord a_;
  Coord b_;
};

/// Convenience: the field shared by a non-empty list, or throws.
const Field& common_field(const Scalar& x, const Scalar& y);

}  // namespace galecubic
