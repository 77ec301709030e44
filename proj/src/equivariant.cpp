#include "galecubic/equivariant.hpp"

#include "galecubic/exterior.hpp"

namespace galecubic {

namespace {

bool is_block_diagonal(const FMatrix& g) {
  if (g.rows() != 6 || g.cols() != 6) return false;
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t c = 0; c < 6; ++c)
      if ((r < 3) != (c < 3) && !g(r, c).is_zero()) return false;
  return true;
}

FMatrix block_diag(const FMatrix& g, const FMatrix& h) {
  const Field& f = g(0, 0).field();
  FMatrix out = zeros(f, 6, 6);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) {
      out(r, c) = g(r, c);
      out(3 + r, 3 + c) = h(r, c);
    }
  return out;
}

ProjectiveSubspace moved(const FMatrix& r, const ProjectiveSubspace& s) {
  return ProjectiveSubspace::span_of(r * s.points());
}

bool same(const ProjectiveSubspace& a, const ProjectiveSubspace& b) { return a.contains(b) && b.contains(a); }

}  // namespace

const Field& GroupActionData::field() const {
  if (generators.empty()) throw InvalidInput("group action without generators");
  return generators[0](0, 0).field();
}

std::vector<FMatrix> GroupActionData::induced() const {
  std::vector<FMatrix> out;
  for (const auto& g : generators) out.push_back(induced_lambda3(g));
  return out;
}

FMatrix induced_lambda3(const FMatrix& g6) {
  if (!is_block_diagonal(g6)) throw InvalidInput("group elements must preserve E + F (block diagonal 3 + 3)");
  return induced_action(g6, 3);
}

std::optional<FMatrix> restricted_action(const FMatrix& basis, const FMatrix& g6) {
  return solve(basis, induced_lambda3(g6) * basis);
}

bool is_g_lagrangian(const RhoLagrangianData& a, const GroupActionData& act) {
  for (const auto& g : act.generators)
    if (!restricted_action(a.A, g)) return false;
  return true;
}

FMatrix variable_action(const QPPresentation& qp, const FMatrix& r10, bool plus_side) {
  const Field& f = r10(0, 0).field();
  // Normalized variable k sits at coordinate idx[k] of the adapted basis.
  const std::vector<std::size_t> idx =
      plus_side ? std::vector<std::size_t>{4, 5, 6, 7, 9, 8} : std::vector<std::size_t>{0, 1, 2, 3, 8, 9};
  const std::size_t kernel_lo = plus_side ? 0 : 4;  // A_F, resp. A_E
  for (std::size_t c = kernel_lo; c < kernel_lo + 4; ++c)
    for (std::size_t r : idx)
      if (r >= 8 || r < kernel_lo || r >= kernel_lo + 4)
        if (!r10(r, c).is_zero()) throw InvalidInput("action does not preserve the subspace projected from");
  FMatrix ry = zeros(f, 6, 6);
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) ry(a, b) = r10(idx[a], idx[b]);
  const FMatrix& change = plus_side ? qp.plus_change : qp.minus_change;
  return change * ry * *inverse(change);
}

std::vector<InvarianceResult> invariance_scalars(const MultiPoly& cubic, const std::vector<FMatrix>& actions,
                                                 const std::vector<std::string>& names) {
  if (cubic.is_zero()) throw InvalidInput("zero cubic");
  std::vector<InvarianceResult> out;
  for (std::size_t k = 0; k < actions.size(); ++k) {
    InvarianceResult r;
    r.name = k < names.size() ? names[k] : "g" + std::to_string(k + 1);
    const MultiPoly moved_cubic = cubic.substitute_linear(actions[k]);
    const auto& [e, c] = *cubic.terms().begin();
    const Scalar s = moved_cubic.coefficient(e) / c;
    if (!s.is_zero() && moved_cubic == cubic * s) {
      r.invariant = true;
      r.scalar = s;
    }
    out.push_back(r);
  }
  return out;
}

bool A4Relations::presents_a4() const {
  return a2 && b2 && ab2 && c3 && ((c_a_cinv_is_b && c_b_cinv_is_ab) || (cinv_a_c_is_b && cinv_b_c_is_ab));
}

A4Relations check_a4_relations(const FMatrix& a, const FMatrix& b, const FMatrix& c) {
  const Field& f = a(0, 0).field();
  const FMatrix id = identity(f, a.rows());
  const auto ci = inverse(c);
  if (!ci) throw InvalidInput("c is not invertible");
  A4Relations r;
  r.a2 = a * a == id;
  r.b2 = b * b == id;
  r.ab2 = (a * b) * (a * b) == id;
  r.c3 = c * c * c == id;
  r.c_a_cinv_is_b = c * a * *ci == b;
  r.c_b_cinv_is_ab = c * b * *ci == a * b;
  r.cinv_a_c_is_b = *ci * a * c == b;
  r.cinv_b_c_is_ab = *ci * b * c == a * b;
  return r;
}

A4FamilyParams A4FamilyParams::example(const Field& f) {
  const Scalar xi = (!f.is_extension() && f.characteristic() == 97) ? f.from_int(35) : f.xi();
  return {f.one(), f.from_int(2), f.one(), f.one(), f.one(), xi};
}

std::vector<FMatrix> a4_generators_v(const Field& f) {
  auto m = [&](std::vector<long> v) {
    FMatrix out = zeros(f, 3, 3);
    for (std::size_t k = 0; k < 9; ++k) out(k / 3, k % 3) = f.from_int(v[k]);
    return out;
  };
  return {m({1, 0, 0, 0, -1, 0, 0, 0, -1}), m({-1, 0, 0, 0, 1, 0, 0, 0, -1}), m({0, 1, 0, 0, 0, 1, 1, 0, 0})};
}

std::vector<FMatrix> a4_displayed_generators(const Field& f, const Scalar& xi) {
  FMatrix a = identity(f, 10), b = identity(f, 10), c = zeros(f, 10, 10);
  for (std::size_t k : {0, 2, 4, 6}) a(k, k) = -f.one();
  for (std::size_t k : {0, 1, 4, 5}) b(k, k) = -f.one();
  for (std::size_t base : {0, 4}) {
    c(base, base + 1) = f.one();
    c(base + 1, base + 2) = f.one();
    c(base + 2, base) = f.one();
  }
  c(3, 3) = c(7, 7) = f.one();
  c(8, 8) = xi * xi;
  c(9, 9) = xi;
  return {a, b, c};
}

A4Family a4_family(const A4FamilyParams& p) {
  const Field& f = p.alpha.field();
  if (f.characteristic() == 3) throw InvalidInput("the family needs characteristic other than 3");
  if (p.lambda.is_zero()) throw InvalidInput("lambda must be nonzero");
  if (!(p.xi * p.xi + p.xi + f.one()).is_zero()) throw InvalidInput("xi must be a primitive cube root of unity");
  const Scalar xi = p.xi, xi2 = xi * xi, three = f.from_int(3);
  auto lin = [&](std::vector<std::pair<std::size_t, Scalar>> terms) {
    std::vector<Scalar> v(6, f.zero());
    for (const auto& [k, c] : terms) v[k] += c;
    return v;
  };
  // X_E in (X4, X5, X6, X7, X8, X9).
  const Scalar &al = p.alpha, &be = p.beta, &ga = p.gamma, &de = p.delta, &la = p.lambda;
  std::vector<std::vector<Scalar>> fe = {
      lin({{3, de}, {4, la}, {5, la}}), lin({{0, be}}), lin({{2, al}}),
      lin({{0, al}}), lin({{3, de}, {4, la * xi}, {5, la * xi2}}), lin({{1, be}}),
      lin({{2, be}}), lin({{1, al}}), lin({{3, de}, {4, la * xi2}, {5, la * xi}}),
      lin({{3, ga}}), lin({{4, f.one()}}), lin({{5, f.one()}})};
  // X_F in (X0, X1, X2, X3, X8, X9); the trailing term is -3 delta X3 X8 X9.
  const Scalar k = -(three * la).inverse();
  std::vector<std::vector<Scalar>> ff = {
      lin({{3, -ga}, {4, k}, {5, k}}), lin({{0, -al}}), lin({{2, be}}),
      lin({{0, be}}), lin({{3, -ga}, {4, k * xi}, {5, k * xi2}}), lin({{1, -al}}),
      lin({{2, -al}}), lin({{1, be}}), lin({{3, -ga}, {4, k * xi2}, {5, k * xi}}),
      lin({{3, three * de}}), lin({{4, f.one()}}), lin({{5, f.one()}})};
  A4Family out{NonSyzygeticEquation(f, fe, 1, {"X4", "X5", "X6", "X7", "X8", "X9"}),
               NonSyzygeticEquation(f, ff, -1, {"X0", "X1", "X2", "X3", "X8", "X9"}),
               {}};
  out.action.names = {"a", "b", "c"};
  for (const auto& g : a4_generators_v(f)) out.action.generators.push_back(block_diag(g, g));
  out.action.displayed = a4_displayed_generators(f, xi);

  try {
    const QPPresentation qp = lagrangian_from_pair(out.X_E, out.X_F, 0).second;
    for (const auto& g : out.action.generators) {
      const auto r = restricted_action(qp.basis, g);
      if (!r) throw InvalidInput("A is not stable");
      out.action.plus_variables.push_back(variable_action(qp, *r, true));
      out.action.minus_variables.push_back(variable_action(qp, *r, false));
    }
  } catch (const InvalidInput&) {
    // Degenerate parameters: leave the variable actions unset.
    out.action.plus_variables.clear();
    out.action.minus_variables.clear();
  }
  return out;
}

EquivarianceReport equivariance_probe(const NonSyzygeticEquation& eq, std::size_t i, const GroupActionData& act,
                                      std::size_t samples, std::uint64_t seed) {
  EquivarianceReport rep;
  const Field& f = *eq.field;
  const auto [a, qp] = lagrangian_from_gale(eq, i);
  const bool plus = eq.sign > 0;
  std::vector<FMatrix> on_vars, on_lambda;
  rep.a_stable = true;
  for (std::size_t k = 0; k < act.generators.size(); ++k) {
    const FMatrix& g = act.generators[k];
    const auto r = restricted_action(a.A, g);
    rep.a_stable = rep.a_stable && r.has_value();
    on_lambda.push_back(inverse(g)->transpose());
  }
  if (rep.a_stable) {
    for (const auto& g : act.generators) on_vars.push_back(variable_action(qp, *restricted_action(qp.basis, g), plus));
  } else {
    on_vars = plus ? act.plus_variables : act.minus_variables;
    if (on_vars.size() != act.generators.size()) {
      rep.error = "A is not stable and no variable action was supplied";
      return rep;
    }
  }
  rep.per_generator_ok.assign(act.generators.size(), 0);

  const std::vector<EPWPoint> pts = harvest_epw_points(a, samples, seed);
  for (const auto& p : pts) {
    const PiGamma pg = pi_gamma(eq, i, p);
    if (!pg.pi_is_plane || !pg.gamma_is_line) continue;
    ++rep.points;
    const ConicLines cl = epw_to_lines(eq, i, p);
    for (std::size_t k = 0; k < act.generators.size(); ++k) {
      ++rep.checks;
      const FMatrix& r = on_vars[k];
      bool ok = true;
      try {
        const EPWPoint gp(mat_vec(on_lambda[k], p.lambda()));
        const PiGamma pg2 = pi_gamma(eq, i, gp);
        ok = pg2.pi_is_plane && pg2.gamma_is_line && same(pg2.Pi, moved(r, pg.Pi)) &&
             same(pg2.Gamma, moved(r, pg.Gamma));
        if (ok && cl.lines) {
          ++rep.line_checks;
          const ProjectiveSubspace l1 = moved(r, cl.lines->first), l2 = moved(r, cl.lines->second);
          ok = line_to_epw(eq, i, l1) == gp && line_to_epw(eq, i, l2) == gp;
          const ConicLines cl2 = epw_to_lines(eq, i, gp);
          ok = ok && cl2.lines &&
               ((same(cl2.lines->first, l1) && same(cl2.lines->second, l2)) ||
                (same(cl2.lines->first, l2) && same(cl2.lines->second, l1)));
        }
      } catch (const InvalidInput&) {
        ok = false;
      }
      if (ok) {
        ++rep.per_generator_ok[k];
      } else {
        ++rep.failures;
      }
    }
  }
  if (rep.points == 0) rep.error = "no usable EPW points found";
  (void)f;
  return rep;
}

}  // namespace galecubic
