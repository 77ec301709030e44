#pragma once

#include <string>
#include <utility>
#include <vector>

#include "galecubic/frame.hpp"
#include "galecubic/gale.hpp"

namespace galecubic {

/// Outcome of checking the three defining conditions of a rho-Lagrangian.
struct LagrangianCheck {
  std::size_t dim = 0, dim_E = 0, dim_F = 0;
  bool dimension_ok = false;  // dim A = 10
  bool lagrangian_ok = false;  // wedge pairing vanishes on A
  bool rho_ok = false;         // dim A_E = dim A_F = 4
  std::vector<std::string> failures;
  bool ok() const { return dimension_ok && lagrangian_ok && rho_ok; }
};

/// A validated rho-Lagrangian: column bases of A, A_E = A n U_E, A_F = A n U_F.
struct RhoLagrangianData {
  FMatrix A;    // 20 x 10
  FMatrix A_E;  // 20 x 4
  FMatrix A_F;  // 20 x 4
  const Field& field() const { return A(0, 0).field(); }
};

LagrangianCheck check_lagrangian(const FMatrix& a);
/// Throws InvalidInput naming every failed condition.
RhoLagrangianData validate(const FMatrix& a);

/// The block presentation of A in the adapted basis (A_F, A_E, c3, c4):
/// Q holds u-coordinates and P holds uhat-coordinates of the basis vectors.
struct QPPresentation {
  FMatrix Q, P;          // 10 x 10 with Q1 = P2 = 0
  FMatrix Qhat, Phat;    // 12 x 6 normal forms
  FMatrix alpha, sigma;  // (Q^tP -+ P^tQ) / 2
  FMatrix basis;         // 20 x 10, columns (A_F | A_E | c3 | c4)
  /// Original variables = change * normalized variables. The normalized
  /// variables of the + member are the coordinates (A_E, c4, c3), those of the
  /// - member (A_F, c3, c4).
  FMatrix plus_change, minus_change;
};

/// The Lagrangian A_i attached to the Gale pair of `eq` and the choice of L_i
/// (i = 0, 1, 2). The "+" member of the pair supplies Qhat and the "-" member
/// Phat, so an equation and its Gale dual give the same subspace.
std::pair<RhoLagrangianData, QPPresentation> lagrangian_from_gale(const NonSyzygeticEquation& eq, std::size_t i);
/// Same construction from an explicit pair (plus has sign +, minus sign -).
/// The L-forms of `minus` are reordered so that the composition vanishes slot
/// by slot; throws when no order works.
std::pair<RhoLagrangianData, QPPresentation> lagrangian_from_pair(const NonSyzygeticEquation& plus,
                                                                  const NonSyzygeticEquation& minus, std::size_t i);

/// Converse construction: the Gale pair (X with sign +, X' with sign -) read
/// off from Qhat and Phat after normalizing (Q3,Q4)^t(P3,P4) to [[0,-1],[-1,0]].
struct GalePair {
  NonSyzygeticEquation plus;   // from Qhat
  NonSyzygeticEquation minus;  // from Phat
  QPPresentation presentation;
};
GalePair gale_from_lagrangian(const RhoLagrangianData& a);

}  // namespace galecubic
