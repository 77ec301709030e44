#pragma once

// Finite group actions on V6 = E + F that preserve the splitting, their
// induced actions on Lambda^3 V6 and on the projected cubics, and the A4
// example family.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "galecubic/epwfano.hpp"
#include "galecubic/gale.hpp"
#include "galecubic/lagrangian.hpp"

namespace galecubic {

struct GroupActionData {
  std::vector<FMatrix> generators;  // 6 x 6, block diagonal 3 + 3
  std::vector<std::string> names;
  /// Transcribed 10 x 10 matrices on (A_F | A_E | c3 | c4), for comparison only.
  std::vector<FMatrix> displayed;
  /// Actions x -> R x on the variables of the + and - cubic, when known
  /// independently of the Lagrangian (used when A is not stable).
  std::vector<FMatrix> plus_variables, minus_variables;

  const Field& field() const;
  std::vector<FMatrix> induced() const;
};

/// Columnwise wedges of images of the grade-3 basis; rejects non-block input.
FMatrix induced_lambda3(const FMatrix& g6);

/// R with induced(g) * basis = basis * R, when the column span is stable.
std::optional<FMatrix> restricted_action(const FMatrix& basis, const FMatrix& g6);

/// Every induced generator maps the column span of A into itself.
bool is_g_lagrangian(const RhoLagrangianData& a, const GroupActionData& act);

/// The action on the variables of the + (plus_side) or - member behind `qp`,
/// from a 10 x 10 action on A: the quotient by A_F (resp. A_E) in the
/// normalized variables, conjugated back by the normal-form change.
FMatrix variable_action(const QPPresentation& qp, const FMatrix& r10, bool plus_side);

struct InvarianceResult {
  std::string name;
  bool invariant = false;
  std::optional<Scalar> scalar;  // cubic(R x) = scalar * cubic(x)
};
std::vector<InvarianceResult> invariance_scalars(const MultiPoly& cubic, const std::vector<FMatrix>& actions,
                                                 const std::vector<std::string>& names);

/// a^2 = b^2 = (ab)^2 = c^3 = 1 together with both conjugation conventions.
struct A4Relations {
  bool a2 = false, b2 = false, ab2 = false, c3 = false;
  bool c_a_cinv_is_b = false, c_b_cinv_is_ab = false;  // c x c^-1
  bool cinv_a_c_is_b = false, cinv_b_c_is_ab = false;  // c^-1 x c
  /// The involution relations and one consistent conjugation direction.
  bool presents_a4() const;
};
A4Relations check_a4_relations(const FMatrix& a, const FMatrix& b, const FMatrix& c);

struct A4FamilyParams {
  Scalar alpha, beta, gamma, delta, lambda, xi;
  /// (alpha, beta, gamma, delta, lambda) = (1, 2, 1, 1, 1); xi = 35 over F_97,
  /// otherwise the field's own cube root of unity.
  static A4FamilyParams example(const Field& f);
};

struct A4Family {
  NonSyzygeticEquation X_E;  // variables X4 .. X9, sign +
  NonSyzygeticEquation X_F;  // variables X0 .. X3, X8, X9, sign -
  GroupActionData action;
};

/// The three generators of the representation V.
std::vector<FMatrix> a4_generators_v(const Field& f);
/// The displayed 10 x 10 generators on X0 .. X9.
std::vector<FMatrix> a4_displayed_generators(const Field& f, const Scalar& xi);
/// Both equations with entries as displayed; the group acts by V on E and on F.
/// The variable actions are derived from the Lagrangian of the pair with L_1.
A4Family a4_family(const A4FamilyParams& p);

struct EquivarianceReport {
  bool a_stable = false;
  std::size_t points = 0;       // EPW points with a plane Pi and a line Gamma
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::size_t line_checks = 0;  // split conics among the checks
  std::vector<std::size_t> per_generator_ok;
  std::string error;
  bool commutes() const { return error.empty() && points > 0 && failures == 0; }
};
/// For harvested EPW points p and each generator g (acting on lambda by g^-T
/// and on the cubic's variables by its variable action): Pi(g p) = g Pi(p),
/// Gamma(g p) = g Gamma(p), and, where the conic splits, the lines of g p are
/// the images of the lines of p and line_to_epw(g l) = g p.
EquivarianceReport equivariance_probe(const NonSyzygeticEquation& eq, std::size_t i, const GroupActionData& act,
                                      std::size_t samples, std::uint64_t seed);

}  // namespace galecubic
