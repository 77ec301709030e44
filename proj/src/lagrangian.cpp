#include "galecubic/lagrangian.hpp"

#include <algorithm>

namespace galecubic {

namespace {

FMatrix scaled(const FMatrix& m, const Scalar& s) {
  FMatrix out = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) *= s;
  return out;
}

Scalar half(const Field& f) {
  if (f.characteristic() == 2) throw InvalidInput("characteristic 2 is not supported");
  return f.from_int(2).inverse();
}

void fill_alpha_sigma(QPPresentation& qp) {
  const Field& f = qp.Q(0, 0).field();
  const FMatrix qtp = qp.Q.transpose() * qp.P, ptq = qp.P.transpose() * qp.Q;
  qp.alpha = scaled(qtp - ptq, half(f));
  qp.sigma = scaled(qtp + ptq, half(f));
}

// Block matrix [[top], [0 | I2]] with top = 10 x 6.
FMatrix with_identity_tail(const FMatrix& top) {
  const Field& f = top(0, 0).field();
  FMatrix out = FMatrix::vcat(top, zeros(f, 2, 6));
  out(10, 4) = f.one();
  out(11, 5) = f.one();
  return out;
}

}  // namespace

namespace {

// U_E and U_F are coordinate subspaces (the frame vectors are signed standard
// basis vectors), so A n U is cut out by the coordinates outside U.
FMatrix meet_coordinate_subspace(const FMatrix& basis, const FMatrix& u) {
  const Field& f = basis(0, 0).field();
  std::vector<std::size_t> outside;
  for (std::size_t r = 0; r < u.rows(); ++r) {
    bool in = false;
    for (std::size_t c = 0; c < u.cols(); ++c) in = in || !u(r, c).is_zero();
    if (!in) outside.push_back(r);
  }
  FMatrix rest = zeros(f, outside.size(), basis.cols());
  for (std::size_t k = 0; k < outside.size(); ++k) rest.set_row(k, basis.row(outside[k]));
  const FMatrix ker = kernel_basis(rest);
  return ker.cols() ? basis * ker : zeros(f, basis.rows(), 0);
}

// g * m for a sparse g (the orientation Gram matrix is a signed permutation).
FMatrix gram_times(const FMatrix& g, const FMatrix& m) {
  FMatrix out = zeros(m(0, 0).field(), g.rows(), m.cols());
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t k = 0; k < g.cols(); ++k)
      if (!g(i, k).is_zero())
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) += g(i, k) * m(k, j);
  return out;
}

LagrangianCheck analyze(const FMatrix& a, RhoLagrangianData* out) {
  LagrangianCheck c;
  if (a.rows() != 20) throw InvalidInput("a subspace of Lambda^3 V6 needs 20-dimensional columns");
  const Field& f = a(0, 0).field();
  const FMatrix basis = column_space_basis(a);
  c.dim = basis.cols();
  c.dimension_ok = c.dim == 10;
  if (!c.dimension_ok) c.failures.push_back("dimension: dim A = " + std::to_string(c.dim) + ", expected 10");
  c.lagrangian_ok = c.dim == 0 || is_zero(basis.transpose() * gram_times(orientation_gram(f), basis));
  if (!c.lagrangian_ok) c.failures.push_back("lagrangian: the wedge pairing does not vanish on A");
  const CoordinateFrame fr = build_frame(f);
  const FMatrix ae = c.dim ? meet_coordinate_subspace(basis, fr.basis_u) : basis;
  const FMatrix af = c.dim ? meet_coordinate_subspace(basis, fr.basis_uhat) : basis;
  c.dim_E = ae.cols();
  c.dim_F = af.cols();
  c.rho_ok = c.dim_E == 4 && c.dim_F == 4;
  if (!c.rho_ok)
    c.failures.push_back("rho: dim A_E = " + std::to_string(c.dim_E) + ", dim A_F = " + std::to_string(c.dim_F) +
                         ", expected 4 and 4");
  if (out) *out = {basis, ae, af};
  return c;
}

}  // namespace

LagrangianCheck check_lagrangian(const FMatrix& a) { return analyze(a, nullptr); }

RhoLagrangianData validate(const FMatrix& a) {
  RhoLagrangianData d;
  const LagrangianCheck c = analyze(a, &d);
  if (!c.ok()) {
    std::string msg = "not a rho-Lagrangian:";
    for (const auto& s : c.failures) msg += " [" + s + "]";
    throw InvalidInput(msg);
  }
  return d;
}

std::pair<RhoLagrangianData, QPPresentation> lagrangian_from_gale(const NonSyzygeticEquation& eq, std::size_t i) {
  const NonSyzygeticEquation dual = gale_dual(eq);
  return eq.sign > 0 ? lagrangian_from_pair(eq, dual, i) : lagrangian_from_pair(dual, eq, i);
}

std::pair<RhoLagrangianData, QPPresentation> lagrangian_from_pair(const NonSyzygeticEquation& plus,
                                                                  const NonSyzygeticEquation& given_minus,
                                                                  std::size_t i) {
  if (i > 2) throw InvalidInput("choice of L must be 1, 2 or 3");
  if (plus.sign < 0 || given_minus.sign > 0) throw InvalidInput("expected the sign + member first");
  const Field& f = *plus.field;
  // Reorder the L-forms of the second member until the composition vanishes slot by slot.
  NonSyzygeticEquation minus = given_minus;
  std::vector<std::size_t> perm = {0, 1, 2};
  bool found = false;
  do {
    for (std::size_t k = 0; k < 3; ++k) minus.forms[NonSyzygeticEquation::l_slot(k)] = given_minus.L(perm[k]);
    found = composition_zero(plus, minus);
  } while (!found && std::next_permutation(perm.begin(), perm.end()));
  if (!found) throw InvalidInput("the two equations are not Gale dual");

  // Row order: the nine M slots, L_i, then the two remaining L's.
  std::vector<std::size_t> order;
  for (std::size_t s = 0; s < 9; ++s) order.push_back(s);
  order.push_back(NonSyzygeticEquation::l_slot(i));
  for (std::size_t k = 0; k < 3; ++k)
    if (k != i) order.push_back(NonSyzygeticEquation::l_slot(k));

  auto normal_form = [&](const NonSyzygeticEquation& e, FMatrix& change) {
    FMatrix raw = zeros(f, 12, 6);
    for (std::size_t r = 0; r < 12; ++r) raw.set_row(r, e.forms[order[r]]);
    const FMatrix bottom = raw.row_block(10, 2);
    if (rank(bottom) != 2)
      throw InvalidInput("cannot normalize the trailing identity block: the two unchosen L-forms are dependent");
    // Column operations G with bottom * G = [0 | I2].
    const FMatrix ker = kernel_basis(bottom);
    const FMatrix rinv = *solve(bottom, identity(f, 2));
    change = FMatrix::hcat(ker, rinv);
    return raw * change;
  };

  QPPresentation qp;
  qp.Qhat = normal_form(plus, qp.plus_change);
  qp.Phat = normal_form(minus, qp.minus_change);
  const FMatrix qtop = qp.Qhat.row_block(0, 10), ptop = qp.Phat.row_block(0, 10);
  const FMatrix Q2 = qtop.col_block(0, 4), Q4 = qtop.col_block(4, 1), Q3 = qtop.col_block(5, 1);
  const FMatrix P1 = ptop.col_block(0, 4), P3 = ptop.col_block(4, 1), P4 = ptop.col_block(5, 1);
  const FMatrix z4 = zeros(f, 10, 4);
  qp.Q = FMatrix::hcat(FMatrix::hcat(z4, Q2), FMatrix::hcat(Q3, Q4));
  qp.P = FMatrix::hcat(FMatrix::hcat(P1, z4), FMatrix::hcat(P3, P4));
  fill_alpha_sigma(qp);
  const CoordinateFrame fr = build_frame(f);
  qp.basis = fr.basis_u * qp.Q + fr.basis_uhat * qp.P;
  RhoLagrangianData data = validate(qp.basis);
  return {data, qp};
}

GalePair gale_from_lagrangian(const RhoLagrangianData& a) {
  const Field& f = a.field();
  const CoordinateFrame fr = build_frame(f);
  if (a.A_E.cols() != 4 || a.A_F.cols() != 4) throw InvalidInput("rho-condition fails: need dim A_E = dim A_F = 4");
  // Complement of A_F + A_E inside A, chosen greedily from A's basis columns.
  FMatrix span = FMatrix::hcat(a.A_F, a.A_E);
  if (rank(span) != 8) throw InvalidInput("A_E and A_F are not independent");
  std::vector<std::vector<Scalar>> extra;
  for (std::size_t j = 0; j < a.A.cols() && extra.size() < 2; ++j) {
    FMatrix trial = FMatrix::hcat(span, column(a.A.col(j)));
    if (rank(trial) > rank(span)) {
      span = trial;
      extra.push_back(a.A.col(j));
    }
  }
  if (extra.size() != 2) throw InvalidInput("A has no two directions outside A_E + A_F");

  auto dot = [&](const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
    Scalar s = f.zero();
    for (std::size_t k = 0; k < x.size(); ++k) s += x[k] * y[k];
    return s;
  };
  // S[a][b] = Q_a^t P_b on the two extra directions.
  Scalar S[2][2];
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) S[r][c] = dot(fr.u_coords(extra[r]), fr.uhat_coords(extra[c]));
  if (S[0][1] != S[1][0]) throw InvalidInput("A is not Lagrangian: the pairing on the complement is not symmetric");
  const Scalar sa = S[0][0], sb = S[0][1], sd = S[1][1];
  const Scalar two = f.from_int(2);
  // Two isotropic vectors of the binary form sa x^2 + 2 sb x y + sd y^2.
  std::vector<Scalar> v1(2, f.zero()), v2(2, f.zero());
  if (sa.is_zero()) {
    v1 = {f.one(), f.zero()};
    if (sb.is_zero()) throw InvalidInput("degenerate pairing on the complement of A_E + A_F");
    v2 = {-sd / (two * sb), f.one()};
  } else {
    const Scalar disc = sb * sb - sa * sd;
    if (disc.is_zero()) throw InvalidInput("degenerate pairing on the complement of A_E + A_F");
    auto r = disc.sqrt();
    if (!r) throw InvalidInput("normalization needs a square root of " + disc.str() + ", which is not in the field");
    v1 = {(-sb + *r) / sa, f.one()};
    v2 = {(-sb - *r) / sa, f.one()};
  }
  auto bilinear = [&](const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
    return x[0] * S[0][0] * y[0] + x[0] * S[0][1] * y[1] + x[1] * S[1][0] * y[0] + x[1] * S[1][1] * y[1];
  };
  const Scalar s12 = bilinear(v1, v2);
  const Scalar k = -s12.inverse();
  v1 = {v1[0] * k, v1[1] * k};
  auto combo = [&](const std::vector<Scalar>& w) {
    std::vector<Scalar> out(20, f.zero());
    for (std::size_t t = 0; t < 20; ++t) out[t] = w[0] * extra[0][t] + w[1] * extra[1][t];
    return out;
  };
  const std::vector<Scalar> c3 = combo(v1), c4 = combo(v2);

  QPPresentation qp;
  qp.basis = FMatrix::hcat(FMatrix::hcat(a.A_F, a.A_E), FMatrix::hcat(column(c3), column(c4)));
  qp.Q = fr.U * qp.basis;
  qp.P = fr.Uhat * qp.basis;
  qp.plus_change = qp.minus_change = identity(f, 6);
  fill_alpha_sigma(qp);
  const FMatrix Q2 = qp.Q.col_block(4, 4), Q3 = qp.Q.col_block(8, 1), Q4 = qp.Q.col_block(9, 1);
  const FMatrix P1 = qp.P.col_block(0, 4), P3 = qp.P.col_block(8, 1), P4 = qp.P.col_block(9, 1);
  qp.Qhat = with_identity_tail(FMatrix::hcat(Q2, FMatrix::hcat(Q4, Q3)));
  qp.Phat = with_identity_tail(FMatrix::hcat(P1, FMatrix::hcat(P3, P4)));
  if (!is_zero(qp.Qhat.transpose() * qp.Phat))
    throw InvalidInput("normal forms do not compose to zero; A is not a rho-Lagrangian");
  GalePair out{from_coefficient_map(qp.Qhat.transpose(), 1, {"z0", "z1", "z2", "z3", "z4", "z5"}),
               from_coefficient_map(qp.Phat.transpose(), -1, {"w0", "w1", "w2", "w3", "w4", "w5"}), qp};
  return out;
}

}  // namespace galecubic
