#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "galecubic/lagrangian.hpp"
#include "galecubic/poly.hpp"

namespace galecubic {

/// A point of P(V6^*): the covector lambda = (e, f) in E^* + F^*, with
/// coordinates dual to (e1, e2, e3, f1, f2, f3). Normalized so that the first
/// nonzero coordinate is 1.
class EPWPoint {
 public:
  explicit EPWPoint(std::vector<Scalar> lambda);
  static EPWPoint from_ef(const std::vector<Scalar>& e, const std::vector<Scalar>& f);

  const std::vector<Scalar>& lambda() const { return lambda_; }
  std::vector<Scalar> e() const { return {lambda_[0], lambda_[1], lambda_[2]}; }
  std::vector<Scalar> f() const { return {lambda_[3], lambda_[4], lambda_[5]}; }
  const Field& field() const { return lambda_[0].field(); }
  bool operator==(const EPWPoint& o) const { return lambda_ == o.lambda_; }
  std::string str() const;

 private:
  std::vector<Scalar> lambda_;
};

/// A linear subspace of P^5 (or P(V6^*)) cut out by independent linear forms.
struct ProjectiveSubspace {
  FMatrix forms;  // rows, in reduced row echelon form
  static ProjectiveSubspace from_forms(const FMatrix& forms);
  static ProjectiveSubspace span_of(const FMatrix& points);  // columns are points
  std::size_t ambient() const { return forms.cols(); }
  /// Projective dimension.
  int dim() const { return static_cast<int>(forms.cols()) - static_cast<int>(forms.rows()) - 1; }
  /// Columns span the underlying vector subspace.
  FMatrix points() const;
  bool contains(const ProjectiveSubspace& o) const;
  bool operator==(const ProjectiveSubspace& o) const { return forms == o.forms; }
};

struct EPWMembership {
  bool member = false;
  std::size_t nullity = 0;  // dim A n Lambda^3 ker(lambda)
};
EPWMembership epw_contains(const RhoLagrangianData& a, const EPWPoint& p);

/// Restriction of the sextic to the line p0 + t p1: the monic determinant of
/// the pairing of A with Lambda^3 ker(lambda(t)), computed in a basis of
/// ker(lambda(t)) that is polynomial in t. Its degree is 6 minus the
/// multiplicity of the point p1 (t = infinity); the zero polynomial means the
/// whole line lies on the sextic.
struct LineDegree {
  UniPoly poly;
  int at_infinity = 0;  // 6 - deg(poly) when poly is nonzero
};
LineDegree epw_line_degree(const RhoLagrangianData& a, const EPWPoint& p0, const EPWPoint& p1);

/// dim(A n (Lambda^2 V3) ^ V6) >= 4, with V3 given by three columns in V6.
struct RhoPlaneResult {
  bool holds = false;
  std::size_t intersection_dim = 0;
  std::size_t wedge_space_dim = 0;
};
RhoPlaneResult rho_plane_condition(const RhoLagrangianData& a, const FMatrix& v3);

/// The planes Sigma = P(E^perp) and Sigma' = P(F^perp) in P(V6^*).
ProjectiveSubspace sigma_plane(const Field& f);
ProjectiveSubspace sigma_prime_plane(const Field& f);

struct PiGamma {
  ProjectiveSubspace Pi, Gamma;
  bool pi_is_plane = false, gamma_is_line = false;
};
/// Pi_i(e, f): M f + e L_i = 0 and Gamma_i(f): M f = L_i = 0, for the
/// equation det M + L1 L2 L3 with (e, f) = (lambda_E, lambda_F). A sign -
/// equation is the F-side cubic: it is read as det(-M^t) + L1 L2 L3 with
/// (e, f) = (lambda_F, lambda_E), so that both members of a Gale pair use the
/// same sextic.
PiGamma pi_gamma(const NonSyzygeticEquation& eq, std::size_t i, const EPWPoint& p);

struct ResidualConic {
  FMatrix matrix;        // 3 x 3 symmetric, q(s) = s^t matrix s
  FMatrix param;         // 6 x 3, x = param * s parametrizes Pi
  MultiPoly line_form;   // L_i restricted to Pi, the equation of Gamma inside Pi
  MultiPoly quadric;     // q(s)
};
ResidualConic residual_conic(const NonSyzygeticEquation& eq, std::size_t i, const EPWPoint& p);

struct ConicLines {
  FMatrix conic;
  std::vector<Scalar> singular_point;  // in P^5
  std::size_t rank = 0;
  std::optional<std::pair<ProjectiveSubspace, ProjectiveSubspace>> lines;
  /// Set when the splitting needs a square root the field does not contain.
  std::optional<Scalar> discriminant;
};
ConicLines epw_to_lines(const NonSyzygeticEquation& eq, std::size_t i, const EPWPoint& p);

/// The point (e, f) with Pi_i(e, f) spanned by Gamma_i(f) and `line`.
EPWPoint line_to_epw(const NonSyzygeticEquation& eq, std::size_t i, const ProjectiveSubspace& line);

/// Points of the sextic found by scanning random lines over a prime field.
std::vector<EPWPoint> harvest_epw_points(const RhoLagrangianData& a, std::size_t count, std::uint64_t seed,
                                         std::size_t max_lines = 200);

/// Necessary condition for "A contains no decomposable vectors": none of
/// `samples` random decomposable trivectors lies in A.
bool no_sampled_decomposable(const RhoLagrangianData& a, std::size_t samples, std::uint64_t seed);

}  // namespace galecubic
