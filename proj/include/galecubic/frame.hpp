#pragma once

#include <string>
#include <vector>

#include "galecubic/exterior.hpp"
#include "galecubic/matrix.hpp"
#include "galecubic/poly.hpp"

namespace galecubic {

/// The twenty coordinate functionals on Lambda^3 V6:
///   u    = (M_E entries in lex order, L_E),  M_E(i,j) = ehat_i ^ f_j,
///   uhat = (M_F entries in lex order, L_F),  M_F(i,j) = e_i ^ fhat_j,
/// with ehat = (e2^e3, -e1^e3, e1^e2), likewise fhat, L_E = e1^e2^e3 and
/// L_F = -f1^f2^f3. Every functional is a signed standard basis vector, so a
/// functional is applied by the dot product with its coefficient vector and the
/// same vector serves as the dual basis element.
struct CoordinateFrame {
  const Field* field = nullptr;
  std::vector<ExteriorElement> u;     // 10 grade-3 elements
  std::vector<ExteriorElement> uhat;  // 10 grade-3 elements
  FMatrix U;                          // 10 x 20, row r is u_r
  FMatrix Uhat;                       // 10 x 20
  FMatrix basis_u;                    // 20 x 10, columns u_r (spans U_E)
  FMatrix basis_uhat;                 // 20 x 10, columns uhat_r (spans U_F)

  /// 20 x 20 matrix with rows u_1..u_10, uhat_1..uhat_10.
  FMatrix evaluation() const;
  std::vector<Scalar> u_coords(const std::vector<Scalar>& x) const { return mat_vec(U, x); }
  std::vector<Scalar> uhat_coords(const std::vector<Scalar>& x) const { return mat_vec(Uhat, x); }
};

CoordinateFrame build_frame(const Field& f);

/// ehat_i (i = 0, 1, 2) and fhat_i as grade-2 elements.
ExteriorElement e_hat(const Field& f, int i);
ExteriorElement f_hat(const Field& f, int i);
/// L_E ^ L_F as a grade-6 element.
ExteriorElement orientation_EF(const Field& f);

/// Names "p123", "p124", ... of the 20 standard coordinates (digits 1-3 for
/// e1-e3 and 4-6 for f1-f3).
std::vector<std::string> lambda3_names();
/// A functional (20 coefficients) as a linear polynomial in the 20 coordinates.
MultiPoly functional_poly(const Field& f, const std::vector<Scalar>& row);

/// U_E = (Lambda^2 E (x) F) + Lambda^3 E and U_F = (E (x) Lambda^2 F) + Lambda^3 F
/// as column spans in the lex grade-3 basis.
FMatrix U_E(const Field& f);
FMatrix U_F(const Field& f);

}  // namespace galecubic
