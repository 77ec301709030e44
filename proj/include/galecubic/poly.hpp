#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "galecubic/field.hpp"
#include "galecubic/matrix.hpp"

namespace galecubic {

using Exponent = std::vector<std::uint16_t>;

/// Sparse multivariate polynomial with dense exponent vectors. Terms are kept
/// in a map ordered lexicographically on exponents (x0 > x1 > ...); the last
/// entry is the lex-leading term. No zero coefficients are stored.
class MultiPoly {
 public:
  MultiPoly();
  MultiPoly(const Field& f, std::size_t nvars);
  MultiPoly(const Field& f, std::vector<std::string> names);

  static MultiPoly constant(const Field& f, std::size_t nvars, const Scalar& c);
  static MultiPoly variable(const Field& f, std::size_t nvars, std::size_t i);
  /// sum_i coeffs[i] * x_i.
  static MultiPoly linear_form(const Field& f, const std::vector<Scalar>& coeffs);
  static MultiPoly monomial(const Field& f, const Exponent& e, const Scalar& c);

  const Field& field() const { return *field_; }
  std::size_t nvars() const { return nvars_; }
  const std::vector<std::string>& names() const { return *names_; }
  /// Same field and variable count, fresh names.
  MultiPoly with_names(std::vector<std::string> names) const;
  MultiPoly zero_like() const;

  const std::map<Exponent, Scalar>& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const Exponent& e) const;
  void add_term(const Exponent& e, const Scalar& c);

  /// -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;
  /// Coefficient vector of a linear form (degree-1 part).
  std::vector<Scalar> linear_coeffs() const;

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly operator*(const Scalar& c) const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  bool operator==(const MultiPoly& o) const;
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }
  MultiPoly pow(unsigned e) const;

  MultiPoly derivative(std::size_t var) const;
  Scalar evaluate(const std::vector<Scalar>& point) const;
  /// Replace x_i by images[i]; all images share one ring.
  MultiPoly compose(const std::vector<MultiPoly>& images) const;
  /// Linear change of variables x_i -> sum_j t(i, j) y_j; result has t.cols() variables.
  MultiPoly substitute_linear(const FMatrix& t) const;

  /// Exact quotient if `d` divides this polynomial.
  std::optional<MultiPoly> divide_exact(const MultiPoly& d) const;
  /// Scaled so that the lex-leading coefficient is 1 (zero stays zero).
  MultiPoly normalized() const;
  /// True when a = c * b for some nonzero scalar c.
  static bool proportional(const MultiPoly& a, const MultiPoly& b);

  std::string str() const;

 private:
  const Field* field_;
  std::size_t nvars_;
  std::shared_ptr<const std::vector<std::string>> names_;
  std::map<Exponent, Scalar> terms_;
  void check_compatible(const MultiPoly& o) const;
};

std::vector<std::string> default_names(const std::string& prefix, std::size_t n);
/// All exponent vectors of total degree d in n variables, in lex-descending order.
std::vector<Exponent> monomials_of_degree(std::size_t nvars, unsigned d);

/// Dense univariate polynomial, coefficients low-to-high.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(const Field& f) : field_(&f) {}
  UniPoly(const Field& f, std::vector<Scalar> coeffs);

  const Field& field() const { return *field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar lead() const { return c_.back(); }

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
  UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
  bool operator==(const UniPoly& o) const { return field_ == o.field_ && c_ == o.c_; }
  bool operator!=(const UniPoly& o) const { return !(*this == o); }

  /// Quotient and remainder.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
  UniPoly monic() const;
  Scalar evaluate(const Scalar& t) const;
  /// Roots in the ground field by exhaustive scan (finite fields only).
  std::vector<Scalar> roots_by_scan() const;
  std::string str(const std::string& var = "t") const;

  static UniPoly gcd(UniPoly a, UniPoly b);

 private:
  const Field* field_ = &Field::rationals();
  std::vector<Scalar> c_;
  void trim();
};

/// Determinant of a matrix of univariate polynomials (fraction-free).
UniPoly det(const Matrix<UniPoly>& m);
/// Determinant of a matrix of multivariate polynomials: cofactor expansion up
/// to size 4, fraction-free elimination above.
MultiPoly det(const Matrix<MultiPoly>& m);
/// pf = m01 m23 - m02 m13 + m03 m12; rejects non-skew input.
MultiPoly pfaffian4(const Matrix<MultiPoly>& m);
Scalar pfaffian4(const FMatrix& m);

}  // namespace galecubic

namespace galecubic {

/// Multipliers c_k with target = sum_k gens[k] * c_k, where each c_k is
/// homogeneous of degree mult_degrees[k]. Solved as one exact linear system;
/// unknowns are ordered generator-major, then by monomials_of_degree order.
/// Requires homogeneous inputs in a common ring.
std::optional<std::vector<MultiPoly>> express_in_ideal(const MultiPoly& target, const std::vector<MultiPoly>& gens,
                                                       const std::vector<unsigned>& mult_degrees);

}  // namespace galecubic
