#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "galecubic/field.hpp"
#include "galecubic/matrix.hpp"

namespace galecubic {

// Exterior algebra of V6 with ordered basis (e1, e2, e3, f1, f2, f3), stored
// as indices 0..5. A basis element of grade p is a p-subset, kept as a bitmask;
// bases of each grade are listed in lexicographic order of increasing tuples.

constexpr int kDim = 6;
enum BasisVector : int { E1 = 0, E2, E3, F1, F2, F3 };

using Mask = std::uint8_t;

/// Lex-ordered basis masks of grade p.
const std::vector<Mask>& grade_basis(int p);
/// Position of `mask` in grade_basis(popcount(mask)).
std::size_t basis_index(Mask mask);
std::size_t grade_dim(int p);
/// "e1^e2^f3" style label.
std::string mask_label(Mask mask);

class ExteriorElement {
 public:
  ExteriorElement(const Field& f, int grade);
  ExteriorElement(int grade, std::vector<Scalar> coeffs);

  static ExteriorElement basis(const Field& f, Mask mask);
  /// The grade-1 element sum v[i] * basis_i.
  static ExteriorElement vector(const std::vector<Scalar>& v);
  static ExteriorElement scalar(const Scalar& s);

  int grade() const { return grade_; }
  const Field& field() const { return *field_; }
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar coeff(Mask mask) const { return c_[basis_index(mask)]; }
  bool is_zero() const;

  ExteriorElement operator+(const ExteriorElement& o) const;
  ExteriorElement operator-(const ExteriorElement& o) const;
  ExteriorElement operator*(const Scalar& s) const;
  ExteriorElement operator-() const { return *this * field_->from_int(-1); }
  bool operator==(const ExteriorElement& o) const { return grade_ == o.grade_ && c_ == o.c_; }

  std::string str() const;

 private:
  const Field* field_;
  int grade_;
  std::vector<Scalar> c_;
};

/// Sign of e_A ^ e_B relative to e_{A u B}; 0 if A and B overlap.
int wedge_sign(Mask a, Mask b);

ExteriorElement wedge(const ExteriorElement& x, const ExteriorElement& y);
/// Contraction by a covector lambda on V6 (6 coefficients).
ExteriorElement contract(const std::vector<Scalar>& lambda, const ExteriorElement& x);
/// Coefficient of e1^e2^e3^f1^f2^f3 in x ^ y, for grade-3 x and y.
Scalar orientation_pair(const ExteriorElement& x, const ExteriorElement& y);
/// Gram matrix of orientation_pair on the lex grade-3 basis (20 x 20).
FMatrix orientation_gram(const Field& f);

/// Matrix of the linear map Lambda^p g in the lex basis of grade p.
FMatrix induced_action(const FMatrix& g, int p);
/// Matrix (grade_dim(p-1) x grade_dim(p)) of contraction by lambda.
FMatrix contraction_matrix(const std::vector<Scalar>& lambda, int p);

}  // namespace galecubic
