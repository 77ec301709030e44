#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "galecubic/frame.hpp"
#include "galecubic/lagrangian.hpp"

namespace galecubic {

/// The frame functionals as linear polynomials in the 20 coordinates p123..p456.
struct FramePolys {
  Matrix<MultiPoly> mE, mF;  // 3 x 3
  MultiPoly lE, lF;
  std::vector<MultiPoly> u, uhat;  // 10 each
};
FramePolys frame_polys(const Field& f);

/// sum_i u_i uhat_i.
MultiPoly sigma_quadric(const Field& f);
/// tr(M_E M_F^t) + L_E L_F.
MultiPoly sigma_trace_form(const Field& f);

/// (2 det M_E - sigma L_E, 2 det M_F + sigma L_F).
std::pair<MultiPoly, MultiPoly> big_cubics(const Field& f);

/// The 20 x 20 matrix of (g, h) acting on Lambda^3 (E + F).
FMatrix g33_action(const FMatrix& g, const FMatrix& h);

struct GeneratorResult {
  std::string name;
  bool invariant = false;
  /// c with p((g,h) x) = c p(x), when such a c exists.
  std::optional<Scalar> scalar;
};
struct GeneratorReport {
  std::vector<GeneratorResult> results;  // L_E, L_F, tr(M_E M_F^t), det M_E, det M_F
  bool all_invariant() const;
};

/// Per-generator scalars for any invertible pair (g, h).
GeneratorReport generator_scalars(const FMatrix& g, const FMatrix& h);
/// Same, restricted to det g = det h = 1; throws InvalidInput otherwise.
GeneratorReport generator_invariance(const FMatrix& g, const FMatrix& h);

/// p((g, h) x) == p(x) for a polynomial in the 20 coordinates.
bool fixed_by(const MultiPoly& p, const FMatrix& action);

struct ProjectedCubics {
  NonSyzygeticEquation X_E;  // sign +, after the involution of the last two coordinates
  NonSyzygeticEquation X_F;  // sign -
  /// Big cubics pulled back along the adapted basis (A_F | A_E | c3 | c4) of A.
  MultiPoly restricted_E, restricted_F;
  bool cone_E = false, cone_F = false;
};
/// Restricts the big cubics to A, checks the cone property and reads off the
/// Gale dual pair. Throws InvalidInput when a check fails.
ProjectedCubics project_cubics(const RhoLagrangianData& a);

}  // namespace galecubic
