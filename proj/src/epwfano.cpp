#include "galecubic/epwfano.hpp"

#include <algorithm>
#include <random>

#include "galecubic/exterior.hpp"

namespace galecubic {

namespace {

Scalar dot(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  Scalar s = a.at(0).field().zero();
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

std::vector<Scalar> scaled(const std::vector<Scalar>& v, const Scalar& s) {
  std::vector<Scalar> out = v;
  for (auto& x : out) x *= s;
  return out;
}

std::vector<Scalar> add(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  std::vector<Scalar> out = a;
  for (std::size_t k = 0; k < a.size(); ++k) out[k] += b[k];
  return out;
}

// The equation as det N + L1 L2 L3 with N = M for sign + and N = -M^t for
// sign -. For sign - the roles of E and F are exchanged: Pi is N f + e L_i = 0
// with (e, f) read from lambda as (lambda_F, lambda_E).
std::vector<Scalar> oriented_M(const NonSyzygeticEquation& eq, std::size_t r, std::size_t c) {
  if (eq.sign > 0) return eq.M(r, c);
  return scaled(eq.M(c, r), -eq.field->one());
}

std::pair<std::vector<Scalar>, std::vector<Scalar>> oriented_ef(const NonSyzygeticEquation& eq, const EPWPoint& p) {
  if (eq.sign > 0) return {p.e(), p.f()};
  return {p.f(), p.e()};
}

EPWPoint point_from_oriented(const NonSyzygeticEquation& eq, const std::vector<Scalar>& e,
                             const std::vector<Scalar>& f) {
  return eq.sign > 0 ? EPWPoint::from_ef(e, f) : EPWPoint::from_ef(f, e);
}

// Linear form (6 coefficients) of (N f)_r.
std::vector<Scalar> mf_form(const NonSyzygeticEquation& eq, std::size_t r, const std::vector<Scalar>& f) {
  std::vector<Scalar> out(6, eq.field->zero());
  for (std::size_t c = 0; c < 3; ++c) out = add(out, scaled(oriented_M(eq, r, c), f[c]));
  return out;
}

FMatrix rows_to_matrix(const Field& f, const std::vector<std::vector<Scalar>>& rows) {
  FMatrix m = zeros(f, rows.size(), rows.empty() ? 6 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
  return m;
}

// N evaluated at x.
FMatrix M_at(const NonSyzygeticEquation& eq, const std::vector<Scalar>& x) {
  FMatrix m = zeros(*eq.field, 3, 3);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) m(r, c) = dot(oriented_M(eq, r, c), x);
  return m;
}

}  // namespace

EPWPoint::EPWPoint(std::vector<Scalar> lambda) : lambda_(std::move(lambda)) {
  if (lambda_.size() != 6) throw InvalidInput("a point of P(V6^*) needs 6 coordinates");
  auto it = std::find_if(lambda_.begin(), lambda_.end(), [](const Scalar& s) { return !s.is_zero(); });
  if (it == lambda_.end()) throw InvalidInput("the zero covector is not a point");
  const Scalar inv = it->inverse();
  for (auto& s : lambda_) s *= inv;
}

EPWPoint EPWPoint::from_ef(const std::vector<Scalar>& e, const std::vector<Scalar>& f) {
  if (e.size() != 3 || f.size() != 3) throw InvalidInput("e and f need 3 coordinates each");
  return EPWPoint({e[0], e[1], e[2], f[0], f[1], f[2]});
}

std::string EPWPoint::str() const {
  std::string s = "(";
  for (std::size_t k = 0; k < 6; ++k) s += (k ? (k == 3 ? " : " : ", ") : "") + lambda_[k].str();
  return s + ")";
}

ProjectiveSubspace ProjectiveSubspace::from_forms(const FMatrix& forms) { return {row_space_basis(forms)}; }

ProjectiveSubspace ProjectiveSubspace::span_of(const FMatrix& points) {
  return {row_space_basis(kernel_basis(points.transpose()).transpose())};
}

FMatrix ProjectiveSubspace::points() const {
  if (forms.rows() == 0) throw InvalidInput("the whole space has no finite point basis here");
  return kernel_basis(forms);
}

bool ProjectiveSubspace::contains(const ProjectiveSubspace& o) const { return is_zero(forms * o.points()); }

EPWMembership epw_contains(const RhoLagrangianData& a, const EPWPoint& p) {
  if (&p.field() != &a.field()) throw InvalidInput("point and Lagrangian live over different fields");
  const FMatrix image = contraction_matrix(p.lambda(), 3) * a.A;
  EPWMembership m;
  m.nullity = a.A.cols() - rank(image);
  m.member = m.nullity >= 1;
  return m;
}

LineDegree epw_line_degree(const RhoLagrangianData& a, const EPWPoint& p0, const EPWPoint& p1) {
  const Field& f = a.field();
  FMatrix lam = zeros(f, 2, 6);
  lam.set_row(0, p0.lambda());
  lam.set_row(1, p1.lambda());
  if (rank(lam) < 2) throw InvalidInput("the two points of the line coincide");
  // v1, v2 dual to the two covectors and v3..v6 in their common kernel; then
  // ker(lambda0 + t lambda1) is spanned by t v1 - v2, v3, ..., v6.
  const FMatrix dual = *solve(lam, identity(f, 2));
  const FMatrix common = kernel_basis(lam);
  std::vector<ExteriorElement> k;
  for (std::size_t c = 0; c < 4; ++c) k.push_back(ExteriorElement(1, common.col(c)));
  const ExteriorElement v1(1, dual.col(0)), v2(1, dual.col(1));

  // A is Lagrangian, so A meets Lambda^3 ker(lambda) iff the pairing with it is singular.
  const FMatrix pair = a.A.transpose() * orientation_gram(f);
  Matrix<UniPoly> n(10, 10, UniPoly(f));
  std::size_t col = 0;
  auto put = [&](const std::vector<Scalar>& c0, const std::vector<Scalar>& c1) {
    const std::vector<Scalar> x0 = mat_vec(pair, c0), x1 = mat_vec(pair, c1);
    for (std::size_t r = 0; r < 10; ++r) n(r, col) = UniPoly(f, {x0[r], x1[r]});
    ++col;
  };
  const std::vector<Scalar> zero(20, f.zero());
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = x + 1; y < 4; ++y) {
      const ExteriorElement kk = wedge(k[x], k[y]);
      put((-wedge(v2, kk)).coeffs(), wedge(v1, kk).coeffs());
      for (std::size_t z = y + 1; z < 4; ++z) put(wedge(kk, k[z]).coeffs(), zero);
    }
  LineDegree out;
  out.poly = det(n);
  if (!out.poly.is_zero()) {
    out.poly = out.poly.monic();
    out.at_infinity = 6 - out.poly.degree();
  }
  return out;
}

RhoPlaneResult rho_plane_condition(const RhoLagrangianData& a, const FMatrix& v3) {
  const Field& f = a.field();
  if (v3.rows() != 6 || rank(v3) != 3) throw InvalidInput("V3 must be given by 3 independent vectors in V6");
  std::vector<ExteriorElement> v;
  for (std::size_t k = 0; k < 3; ++k) v.push_back(ExteriorElement(1, v3.col(k)));
  std::vector<std::vector<Scalar>> gens;
  for (std::size_t x = 0; x < 3; ++x)
    for (std::size_t y = x + 1; y < 3; ++y)
      for (int k = 0; k < kDim; ++k)
        gens.push_back(wedge(wedge(v[x], v[y]), ExteriorElement::basis(f, Mask(1u << k))).coeffs());
  const FMatrix span = column_space_basis(rows_to_matrix(f, gens).transpose());
  RhoPlaneResult out;
  out.wedge_space_dim = span.cols();
  out.intersection_dim = intersection_dim(a.A, span);
  out.holds = out.intersection_dim >= 4;
  return out;
}

ProjectiveSubspace sigma_plane(const Field& f) {
  FMatrix m = zeros(f, 3, 6);
  for (std::size_t k = 0; k < 3; ++k) m(k, k) = f.one();
  return ProjectiveSubspace::from_forms(m);
}

ProjectiveSubspace sigma_prime_plane(const Field& f) {
  FMatrix m = zeros(f, 3, 6);
  for (std::size_t k = 0; k < 3; ++k) m(k, 3 + k) = f.one();
  return ProjectiveSubspace::from_forms(m);
}

PiGamma pi_gamma(const NonSyzygeticEquation& eq, std::size_t i, const EPWPoint& p) {
  if (i > 2) throw InvalidInput("L-index must be 1, 2 or 3");
  const Field& fld = *eq.field;
  if (&p.field() != &fld) throw InvalidInput("point and equation live over different fields");
  const auto [e, f] = oriented_ef(eq, p);
  if (std::all_of(e.begin(), e.end(), [](const Scalar& s) { return s.is_zero(); }))
    throw InvalidInput("Pi_i(e, f) needs e != 0");
  std::vector<std::vector<Scalar>> pi_rows, gamma_rows;
  for (std::size_t r = 0; r < 3; ++r) {
    const std::vector<Scalar> mf = mf_form(eq, r, f);
    pi_rows.push_back(add(mf, scaled(eq.L(i), e[r])));
    gamma_rows.push_back(mf);
  }
  gamma_rows.push_back(eq.L(i));
  PiGamma out{ProjectiveSubspace::from_forms(rows_to_matrix(fld, pi_rows)),
              ProjectiveSubspace::from_forms(rows_to_matrix(fld, gamma_rows)), false, false};
  out.pi_is_plane = out.Pi.dim() == 2;
  out.gamma_is_line = out.Gamma.dim() == 1;
  return out;
}

ResidualConic residual_conic(const NonSyzygeticEquation& eq, std::size_t i, const EPWPoint& p) {
  const Field& f = *eq.field;
  const PiGamma pg = pi_gamma(eq, i, p);
  if (!pg.pi_is_plane || !pg.gamma_is_line)
    throw InvalidInput("residual conic needs Pi to be a plane and Gamma a line");
  ResidualConic out;
  out.param = pg.Pi.points();
  const std::vector<std::string> names = {"s0", "s1", "s2"};
  const MultiPoly cubic = cubic_polynomial(eq).substitute_linear(out.param).with_names(names);
  out.line_form = MultiPoly::linear_form(f, mat_vec(out.param.transpose(), eq.L(i))).with_names(names);
  if (out.line_form.is_zero()) throw InvalidInput("L_i vanishes on Pi");
  auto q = cubic.divide_exact(out.line_form);
  if (!q) throw std::logic_error("internal inconsistency: Gamma is not contained in X n Pi");
  out.quadric = *q;
  out.matrix = zeros(f, 3, 3);
  const Scalar half = f.from_int(2).inverse();
  for (const auto& [e, c] : out.quadric.terms()) {
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < 3; ++k)
      for (unsigned m = 0; m < e[k]; ++m) idx.push_back(k);
    if (idx.size() != 2) throw std::logic_error("internal inconsistency: residual is not a quadric");
    if (idx[0] == idx[1]) {
      out.matrix(idx[0], idx[0]) = c;
    } else {
      out.matrix(idx[0], idx[1]) = c * half;
      out.matrix(idx[1], idx[0]) = c * half;
    }
  }
  return out;
}

ConicLines epw_to_lines(const NonSyzygeticEquation& eq, std::size_t i, const EPWPoint& p) {
  const Field& f = *eq.field;
  const ResidualConic rc = residual_conic(eq, i, p);
  ConicLines out;
  out.conic = rc.matrix;
  out.rank = rank(rc.matrix);
  if (out.rank == 3) throw std::logic_error("internal inconsistency: the residual conic is smooth");
  if (out.rank == 0) throw InvalidInput("the residual quadric vanishes identically");
  const FMatrix ker = kernel_basis(rc.matrix);
  const std::vector<Scalar> s0 = ker.col(0);
  out.singular_point = mat_vec(rc.param, s0);
  auto line_through = [&](const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
    return ProjectiveSubspace::span_of(FMatrix::hcat(column(mat_vec(rc.param, a)), column(mat_vec(rc.param, b))));
  };
  if (out.rank == 1) {
    // q = c * l^2: the line l = 0 counted twice.
    const FMatrix pts = ker;  // 2 columns spanning l = 0
    ProjectiveSubspace l = line_through(pts.col(0), pts.col(1));
    out.lines = std::make_pair(l, l);
    return out;
  }
  // Rank 2: restrict q to a line w1 w2 not through s0; q there is a binary quadric.
  std::vector<std::vector<Scalar>> complement;
  FMatrix span = column(s0);
  for (std::size_t k = 0; k < 3 && complement.size() < 2; ++k) {
    std::vector<Scalar> unit(3, f.zero());
    unit[k] = f.one();
    FMatrix trial = FMatrix::hcat(span, column(unit));
    if (rank(trial) > rank(span)) {
      span = trial;
      complement.push_back(unit);
    }
  }
  auto qform = [&](const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
    return dot(x, mat_vec(rc.matrix, y));
  };
  const Scalar a = qform(complement[0], complement[0]), b = qform(complement[0], complement[1]),
               c = qform(complement[1], complement[1]);
  // Roots (x : y) of a x^2 + 2 b x y + c y^2.
  std::vector<std::vector<Scalar>> roots;
  if (a.is_zero()) {
    roots = {{f.one(), f.zero()}, {-c, f.from_int(2) * b}};
  } else {
    const Scalar disc = b * b - a * c;
    auto r = disc.sqrt();
    if (!r) {
      out.discriminant = disc;
      return out;
    }
    roots = {{-b + *r, a}, {-b - *r, a}};
  }
  auto point = [&](const std::vector<Scalar>& xy) {
    return add(scaled(complement[0], xy[0]), scaled(complement[1], xy[1]));
  };
  out.lines = std::make_pair(line_through(s0, point(roots[0])), line_through(s0, point(roots[1])));
  return out;
}

EPWPoint line_to_epw(const NonSyzygeticEquation& eq, std::size_t i, const ProjectiveSubspace& line) {
  const Field& fld = *eq.field;
  if (i > 2) throw InvalidInput("L-index must be 1, 2 or 3");
  if (line.ambient() != 6 || line.dim() != 1) throw InvalidInput("line_to_epw needs a line in P^5");
  const FMatrix k = line.points();
  if (!cubic_polynomial(eq).substitute_linear(k).is_zero()) throw InvalidInput("line is not contained in X");
  const std::vector<Scalar> li = mat_vec(k.transpose(), eq.L(i));
  if (li[0].is_zero() && li[1].is_zero())
    throw InvalidInput("line lies in L_i = 0: no single intersection point");
  const std::vector<Scalar> x0 = add(scaled(k.col(0), li[1]), scaled(k.col(1), -li[0]));
  const FMatrix m = M_at(eq, x0);
  const std::size_t rk = rank(m);
  if (rk != 2) throw InvalidInput("M has rank " + std::to_string(rk) + " at the intersection with L_i = 0, expected 2");
  const std::vector<Scalar> f = kernel_basis(m).col(0);

  std::vector<std::vector<Scalar>> gamma_rows;
  for (std::size_t r = 0; r < 3; ++r) gamma_rows.push_back(mf_form(eq, r, f));
  gamma_rows.push_back(eq.L(i));
  const ProjectiveSubspace gamma = ProjectiveSubspace::from_forms(rows_to_matrix(fld, gamma_rows));
  if (gamma.dim() != 1) throw InvalidInput("Gamma_i(f) is not a line");
  const FMatrix pi_pts = column_space_basis(FMatrix::hcat(gamma.points(), k));
  if (pi_pts.cols() != 3) throw InvalidInput("the line and Gamma_i(f) do not span a plane");
  // A point of Pi off L_i = 0 determines e.
  std::vector<Scalar> y;
  for (std::size_t c = 0; c < 3 && y.empty(); ++c)
    if (!dot(eq.L(i), pi_pts.col(c)).is_zero()) y = pi_pts.col(c);
  if (y.empty()) throw InvalidInput("L_i vanishes on the spanned plane");
  const Scalar ly = dot(eq.L(i), y);
  std::vector<Scalar> e(3, fld.zero());
  for (std::size_t r = 0; r < 3; ++r) e[r] = -dot(gamma_rows[r], y) / ly;
  for (std::size_t c = 0; c < 3; ++c)
    for (std::size_t r = 0; r < 3; ++r)
      if (!(dot(gamma_rows[r], pi_pts.col(c)) + e[r] * dot(eq.L(i), pi_pts.col(c))).is_zero())
        throw std::logic_error("internal inconsistency: no e with Pi = Pi_i(e, f)");
  return point_from_oriented(eq, e, f);
}

std::vector<EPWPoint> harvest_epw_points(const RhoLagrangianData& a, std::size_t count, std::uint64_t seed,
                                         std::size_t max_lines) {
  const Field& f = a.field();
  if (f.is_extension() || f.characteristic() == 0) throw InvalidInput("harvesting scans a prime field");
  const long p = static_cast<long>(f.characteristic());
  std::mt19937_64 rng(seed);
  auto random_point = [&]() {
    std::vector<Scalar> v;
    for (int k = 0; k < 6; ++k) v.push_back(f.from_int(static_cast<long>(rng() % static_cast<unsigned long>(p))));
    return v;
  };
  std::vector<EPWPoint> out;
  for (std::size_t line = 0; line < max_lines && out.size() < count; ++line) {
    std::vector<Scalar> p0 = random_point(), p1 = random_point();
    if (rank(FMatrix::hcat(column(p0), column(p1))) < 2) continue;
    for (long t = 0; t < p && out.size() < count; ++t) {
      EPWPoint q(add(p0, scaled(p1, f.from_int(t))));
      if (epw_contains(a, q).member && std::find(out.begin(), out.end(), q) == out.end()) out.push_back(q);
    }
  }
  return out;
}

bool no_sampled_decomposable(const RhoLagrangianData& a, std::size_t samples, std::uint64_t seed) {
  const Field& f = a.field();
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    ExteriorElement w = ExteriorElement::scalar(f.one());
    for (int k = 0; k < 3; ++k) {
      std::vector<Scalar> v;
      for (int c = 0; c < 6; ++c) v.push_back(f.from_int(static_cast<long>(rng() % 21) - 10));
      w = wedge(w, ExteriorElement(1, v));
    }
    if (w.is_zero()) continue;
    if (rank(FMatrix::hcat(a.A, column(w.coeffs()))) == a.A.cols()) return false;
  }
  return true;
}

}  // namespace galecubic
