#pragma once

#include <optional>
#include <vector>

#include "galecubic/exterior.hpp"
#include "galecubic/poly.hpp"

namespace galecubic {

/// The splitting V6 = V1 + V5 used for the Gushel-Mukai quadrics: V1 is spanned
/// by the basis vector `distinguished` (E1 for the E side) and v1..v5 are the
/// remaining basis vectors in increasing order.
struct Splitting15 {
  int distinguished = E1;
  std::vector<int> v() const;
};
inline constexpr Splitting15 kSideE{E1};
inline constexpr Splitting15 kSideF{F1};

/// N(i, j) = the functional v_i ^ v_j ^ e_d on Lambda^3 V6, as a linear form in
/// the 20 coordinates p123..p456.
Matrix<MultiPoly> build_n15(const Field& f, Splitting15 s = kSideE);

/// The ten-tuples U = ((-1)^(i-j+1) e_d ^ v_i ^ v_j)_{i<j} and Uhat =
/// (v_k ^ v_l ^ v_m), ordered and signed so that u_i ^ uhat_i = e_d ^ v1 ^ ... ^ v5.
struct DualTuples15 {
  std::vector<ExteriorElement> u, uhat;
  ExteriorElement top;
};
DualTuples15 dual_tuples15(const Field& f, Splitting15 s = kSideE);

/// sum_i u_i uhat_i.
MultiPoly build_sigma15(const Field& f, Splitting15 s = kSideE);

/// The five 4 x 4 Pfaffians of N (Pfaffian k omits row and column k) and sigma.
std::vector<MultiPoly> z15_ideal(const Field& f, Splitting15 s = kSideE);

/// Linear multipliers l_k with cubic = sum_k quadrics[k] * l_k, or nullopt.
std::optional<std::vector<MultiPoly>> ideal_membership_deg3(const MultiPoly& cubic,
                                                            const std::vector<MultiPoly>& quadrics);
/// Re-expands sum quadrics[k] * multipliers[k] - cubic and tests for zero.
bool verify_certificate(const MultiPoly& cubic, const std::vector<MultiPoly>& quadrics,
                        const std::vector<MultiPoly>& multipliers);

}  // namespace galecubic
