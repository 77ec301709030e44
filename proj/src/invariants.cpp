#include "galecubic/invariants.hpp"

namespace galecubic {

FramePolys frame_polys(const Field& f) {
  const CoordinateFrame fr = build_frame(f);
  const MultiPoly zero(f, lambda3_names());
  FramePolys out{Matrix<MultiPoly>(3, 3, zero), Matrix<MultiPoly>(3, 3, zero), zero, zero, {}, {}};
  for (std::size_t r = 0; r < 10; ++r) {
    out.u.push_back(functional_poly(f, fr.U.row(r)));
    out.uhat.push_back(functional_poly(f, fr.Uhat.row(r)));
  }
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      out.mE(i, j) = out.u[3 * i + j];
      out.mF(i, j) = out.uhat[3 * i + j];
    }
  out.lE = out.u[9];
  out.lF = out.uhat[9];
  return out;
}

MultiPoly sigma_quadric(const Field& f) {
  const FramePolys fp = frame_polys(f);
  MultiPoly s = fp.lE.zero_like();
  for (std::size_t r = 0; r < 10; ++r) s += fp.u[r] * fp.uhat[r];
  return s;
}

MultiPoly sigma_trace_form(const Field& f) {
  const FramePolys fp = frame_polys(f);
  const Matrix<MultiPoly> prod = fp.mE * fp.mF.transpose();
  MultiPoly s = fp.lE * fp.lF;
  for (std::size_t i = 0; i < 3; ++i) s += prod(i, i);
  return s;
}

std::pair<MultiPoly, MultiPoly> big_cubics(const Field& f) {
  const FramePolys fp = frame_polys(f);
  const MultiPoly sigma = sigma_quadric(f);
  const Scalar two = f.from_int(2);
  return {det(fp.mE) * two - sigma * fp.lE, det(fp.mF) * two + sigma * fp.lF};
}

FMatrix g33_action(const FMatrix& g, const FMatrix& h) {
  if (g.rows() != 3 || g.cols() != 3 || h.rows() != 3 || h.cols() != 3)
    throw InvalidInput("the group elements must be 3 x 3");
  const Field& f = g(0, 0).field();
  FMatrix block = zeros(f, 6, 6);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      block(i, j) = g(i, j);
      block(3 + i, 3 + j) = h(i, j);
    }
  return induced_action(block, 3);
}

bool fixed_by(const MultiPoly& p, const FMatrix& action) { return p.substitute_linear(action) == p; }

bool GeneratorReport::all_invariant() const {
  for (const auto& r : results)
    if (!r.invariant) return false;
  return true;
}

GeneratorReport generator_scalars(const FMatrix& g, const FMatrix& h) {
  const Field& f = g(0, 0).field();
  if (det(g).is_zero() || det(h).is_zero()) throw InvalidInput("group elements must be invertible");
  const FMatrix t = g33_action(g, h);
  const FramePolys fp = frame_polys(f);
  MultiPoly trace = fp.lE.zero_like();
  const Matrix<MultiPoly> prod = fp.mE * fp.mF.transpose();
  for (std::size_t i = 0; i < 3; ++i) trace += prod(i, i);
  const std::vector<std::pair<std::string, MultiPoly>> gens = {
      {"L_E", fp.lE}, {"L_F", fp.lF}, {"tr(M_E M_F^t)", trace}, {"det M_E", det(fp.mE)}, {"det M_F", det(fp.mF)}};
  GeneratorReport rep;
  for (const auto& [name, p] : gens) {
    GeneratorResult r{name, false, std::nullopt};
    const MultiPoly moved = p.substitute_linear(t);
    r.invariant = moved == p;
    if (!moved.is_zero()) {
      const Scalar c = moved.terms().rbegin()->second / p.terms().rbegin()->second;
      if (moved == p * c) r.scalar = c;
    }
    rep.results.push_back(r);
  }
  return rep;
}

GeneratorReport generator_invariance(const FMatrix& g, const FMatrix& h) {
  const Field& f = g(0, 0).field();
  if (det(g) != f.one() || det(h) != f.one()) throw InvalidInput("generator_invariance needs det g = det h = 1");
  return generator_scalars(g, h);
}

ProjectedCubics project_cubics(const RhoLagrangianData& a) {
  const Field& f = a.field();
  const GalePair pair = gale_from_lagrangian(a);
  const FMatrix& basis = pair.presentation.basis;
  const auto [xe, xf] = big_cubics(f);
  ProjectedCubics out{pair.plus, pair.minus, xe.substitute_linear(basis), xf.substitute_linear(basis), true, true};
  // Vertex P(A_F) for X_E, P(A_E) for X_F.
  for (std::size_t k = 0; k < 4; ++k) {
    out.cone_E = out.cone_E && out.restricted_E.derivative(k).is_zero();
    out.cone_F = out.cone_F && out.restricted_F.derivative(4 + k).is_zero();
  }
  if (!out.cone_E || !out.cone_F) throw InvalidInput("cone property fails; A is not a valid rho-Lagrangian");

  // z -> y embeddings; for X_E the last two coordinates are exchanged.
  auto embed = [&](const std::vector<std::size_t>& targets) {
    FMatrix t = zeros(f, 6, 10);
    for (std::size_t z = 0; z < 6; ++z) t(z, targets[z]) = f.one();
    return t;
  };
  const Scalar two = f.from_int(2);
  const MultiPoly expect_E = (cubic_polynomial(pair.plus) * two).substitute_linear(embed({4, 5, 6, 7, 9, 8}));
  const MultiPoly expect_F = (cubic_polynomial(pair.minus) * two).substitute_linear(embed({0, 1, 2, 3, 8, 9}));
  const std::vector<std::string> names = default_names("y", 10);
  if (expect_E.with_names(names) != out.restricted_E.with_names(names) ||
      expect_F.with_names(names) != out.restricted_F.with_names(names))
    throw InvalidInput("restricted big cubics do not match the projected Gale pair");
  return out;
}

}  // namespace galecubic
