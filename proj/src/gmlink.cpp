#include "galecubic/gmlink.hpp"

#include "galecubic/frame.hpp"

namespace galecubic {

namespace {

ExteriorElement vec(const Field& f, int i) { return ExteriorElement::basis(f, Mask(1u << i)); }

MultiPoly functional(const Field& f, const ExteriorElement& x) { return functional_poly(f, x.coeffs()); }

}  // namespace

std::vector<int> Splitting15::v() const {
  if (distinguished < 0 || distinguished >= kDim) throw InvalidInput("distinguished index out of range");
  std::vector<int> out;
  for (int k = 0; k < kDim; ++k)
    if (k != distinguished) out.push_back(k);
  return out;
}

Matrix<MultiPoly> build_n15(const Field& f, Splitting15 s) {
  const std::vector<int> v = s.v();
  Matrix<MultiPoly> n(5, 5, MultiPoly(f, lambda3_names()));
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      if (i != j) n(i, j) = functional(f, wedge(wedge(vec(f, v[i]), vec(f, v[j])), vec(f, s.distinguished)));
  return n;
}

DualTuples15 dual_tuples15(const Field& f, Splitting15 s) {
  const std::vector<int> v = s.v();
  ExteriorElement top = vec(f, s.distinguished);
  for (int k : v) top = wedge(top, vec(f, k));
  DualTuples15 out{{}, {}, top};
  std::vector<ExteriorElement> candidates;
  for (int k = 0; k < 5; ++k)
    for (int l = k + 1; l < 5; ++l)
      for (int m = l + 1; m < 5; ++m)
        candidates.push_back(wedge(wedge(vec(f, v[k]), vec(f, v[l])), vec(f, v[m])));
  // The index exponent is only used for its parity.
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) {
      ExteriorElement u = wedge(wedge(vec(f, s.distinguished), vec(f, v[i])), vec(f, v[j]));
      if ((i - j + 1) % 2 != 0) u = -u;
      out.u.push_back(u);
      // Sorting: the unique candidate pairing nontrivially with u, sign-fixed.
      for (const auto& c : candidates) {
        const ExteriorElement w = wedge(u, c);
        if (w.is_zero()) continue;
        out.uhat.push_back(w == out.top ? c : -c);
        break;
      }
    }
  return out;
}

MultiPoly build_sigma15(const Field& f, Splitting15 s) {
  const DualTuples15 t = dual_tuples15(f, s);
  MultiPoly sigma(f, lambda3_names());
  for (std::size_t i = 0; i < 10; ++i) sigma += functional(f, t.u[i]) * functional(f, t.uhat[i]);
  return sigma;
}

std::vector<MultiPoly> z15_ideal(const Field& f, Splitting15 s) {
  const Matrix<MultiPoly> n = build_n15(f, s);
  std::vector<MultiPoly> out;
  for (std::size_t k = 0; k < 5; ++k) {
    Matrix<MultiPoly> m(4, 4, MultiPoly(f, lambda3_names()));
    std::size_t r = 0;
    for (std::size_t i = 0; i < 5; ++i) {
      if (i == k) continue;
      std::size_t c = 0;
      for (std::size_t j = 0; j < 5; ++j) {
        if (j == k) continue;
        m(r, c++) = n(i, j);
      }
      ++r;
    }
    out.push_back(pfaffian4(m));
  }
  out.push_back(build_sigma15(f, s));
  return out;
}

std::optional<std::vector<MultiPoly>> ideal_membership_deg3(const MultiPoly& cubic,
                                                            const std::vector<MultiPoly>& quadrics) {
  if (!cubic.is_homogeneous() || cubic.total_degree() != 3) throw InvalidInput("target must be a homogeneous cubic");
  for (const auto& q : quadrics)
    if (!q.is_homogeneous() || q.total_degree() != 2) throw InvalidInput("generators must be homogeneous quadrics");
  return express_in_ideal(cubic, quadrics, std::vector<unsigned>(quadrics.size(), 1));
}

bool verify_certificate(const MultiPoly& cubic, const std::vector<MultiPoly>& quadrics,
                        const std::vector<MultiPoly>& multipliers) {
  if (quadrics.size() != multipliers.size()) return false;
  MultiPoly acc = cubic.zero_like();
  for (std::size_t k = 0; k < quadrics.size(); ++k) acc += quadrics[k] * multipliers[k];
  return (acc - cubic).is_zero();
}

}  // namespace galecubic
