#pragma once

#include <optional>
#include <string>
#include <vector>

#include "galecubic/field.hpp"
#include "galecubic/matrix.hpp"
#include "galecubic/poly.hpp"

namespace galecubic {

/// A cubic det(M) + sign * L1 L2 L3 = 0 in six variables. The twelve linear
/// forms are stored as coefficient vectors in the slot order
/// M11, M12, M13, M21, ..., M33, L1, L2, L3.
struct NonSyzygeticEquation {
  const Field* field = &Field::rationals();
  std::vector<std::vector<Scalar>> forms;  // 12 x 6
  int sign = 1;
  std::vector<std::string> variables = default_names("X", 6);

  NonSyzygeticEquation() = default;
  NonSyzygeticEquation(const Field& f, std::vector<std::vector<Scalar>> forms, int sign,
                       std::vector<std::string> vars = default_names("X", 6));

  static constexpr std::size_t kSlots = 12;
  static std::size_t m_slot(std::size_t i, std::size_t j) { return 3 * i + j; }
  static std::size_t l_slot(std::size_t i) { return 9 + i; }

  const std::vector<Scalar>& M(std::size_t i, std::size_t j) const { return forms[m_slot(i, j)]; }
  const std::vector<Scalar>& L(std::size_t i) const { return forms[l_slot(i)]; }

  /// At least two of L1, L2, L3 are linearly independent.
  bool l_forms_valid() const;
  bool operator==(const NonSyzygeticEquation& o) const;
};

/// 6 x 12 matrix; column j holds the coefficients of the j-th form.
FMatrix coefficient_map(const NonSyzygeticEquation& eq);
NonSyzygeticEquation from_coefficient_map(const FMatrix& c, int sign,
                                          std::vector<std::string> vars = default_names("X", 6));

/// The twelve forms read off the canonical kernel basis of coefficient_map,
/// in dual variables, with the opposite sign. Throws InvalidInput when the
/// coefficient map has rank below 6.
NonSyzygeticEquation gale_dual(const NonSyzygeticEquation& eq);

MultiPoly cubic_polynomial(const NonSyzygeticEquation& eq);

/// coefficient_map(a) * coefficient_map(b)^t == 0, same slot order.
bool composition_zero(const NonSyzygeticEquation& a, const NonSyzygeticEquation& b);
/// composition_zero after some reordering of b's L-forms, with opposite signs
/// and both coefficient maps of rank 6.
bool is_gale_pair(const NonSyzygeticEquation& a, const NonSyzygeticEquation& b);

/// Result of comparing two equations up to a linear change of coordinates.
struct Equivalence {
  bool equivalent = false;
  std::vector<int> l_permutation;  // b's L_k sits in a's slot L_{perm[k]}
  FMatrix change;                  // b's forms = a's forms composed with this 6x6 matrix
};
/// Is b obtained from a by an invertible change of coordinates and a
/// permutation of the L-forms, with proportional cubics?
Equivalence equivalent_equations(const NonSyzygeticEquation& a, const NonSyzygeticEquation& b);

/// Multipliers proving that the cubic lies in the ideal of a cubic scroll.
struct ScrollCertificate {
  std::vector<MultiPoly> minors;  // the three 2x2 minors of the chosen rows
  std::vector<MultiPoly> linear;  // multipliers of the minors
  MultiPoly quadric;              // multiplier of L_i
};
/// `rows` is a 2x3 matrix selecting two generalized rows (combinations of the
/// rows of M). Decides whether cubic = sum minors_k * l_k + L_i * q.
std::optional<ScrollCertificate> scroll_membership(const NonSyzygeticEquation& eq, std::size_t i,
                                                   const FMatrix& rows);
/// Same test for an arbitrary cubic against the scroll defined by eq's rows.
std::optional<ScrollCertificate> scroll_membership(const MultiPoly& cubic, const NonSyzygeticEquation& eq,
                                                   std::size_t i, const FMatrix& rows);

/// Random tuple whose coefficient map has rank 6 (entries in [-span, span]).
template <class Rng>
NonSyzygeticEquation random_equation(const Field& f, Rng& rng, int sign = 1, long span = 5) {
  for (;;) {
    std::vector<std::vector<Scalar>> forms(12, std::vector<Scalar>(6, f.zero()));
    for (auto& row : forms)
      for (auto& c : row) {
        long v = static_cast<long>(rng() % static_cast<unsigned long>(2 * span + 1)) - span;
        c = f.from_int(v);
      }
    NonSyzygeticEquation eq(f, forms, sign);
    if (rank(coefficient_map(eq)) == 6 && eq.l_forms_valid()) return eq;
  }
}

}  // namespace galecubic
