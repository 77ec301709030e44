#include <random>

#include "doctest.h"
#include "galecubic/epwfano.hpp"
#include "helpers.hpp"

using namespace galecubic;
using namespace testutil;

namespace {

std::vector<Scalar> random_vec(const Field& f, std::mt19937_64& rng, std::size_t n, long span = 50) {
  std::vector<Scalar> v;
  for (std::size_t k = 0; k < n; ++k) v.push_back(random_scalar(f, rng, span));
  return v;
}

EPWPoint random_point(const Field& f, std::mt19937_64& rng) {
  for (;;) {
    auto v = random_vec(f, rng, 6);
    bool nz = false;
    for (const auto& s : v) nz = nz || !s.is_zero();
    if (nz) return EPWPoint(v);
  }
}

EPWPoint sigma_point(const Field& f, std::mt19937_64& rng, bool prime_side) {
  for (;;) {
    auto v = random_vec(f, rng, 3);
    if (v[0].is_zero() && v[1].is_zero() && v[2].is_zero()) continue;
    std::vector<Scalar> z(3, f.zero());
    return prime_side ? EPWPoint::from_ef(v, z) : EPWPoint::from_ef(z, v);
  }
}

int order_at_zero(const UniPoly& p) {
  int k = 0;
  while (p.coeffs()[static_cast<std::size_t>(k)].is_zero()) ++k;
  return k;
}

}  // namespace

TEST_CASE("EPW membership of Sigma and Sigma'") {
  std::mt19937_64 rng(41);
  for (const Field* f : {&Field::rationals(), &Field::prime(101)}) {
    NonSyzygeticEquation eq = random_equation(*f, rng);
    RhoLagrangianData a = lagrangian_from_gale(eq, 0).first;
    for (int k = 0; k < 50; ++k) {
      CHECK(epw_contains(a, sigma_point(*f, rng, false)).member);
      CHECK(epw_contains(a, sigma_point(*f, rng, true)).member);
    }
    if (f->characteristic() == 0) {
      EPWMembership m = epw_contains(a, random_point(*f, rng));
      CHECK(!m.member);
      CHECK(m.nullity == 0);
    }
    // Sigma and Sigma' have no common point.
    FMatrix both = FMatrix::vcat(sigma_plane(*f).forms, sigma_prime_plane(*f).forms);
    CHECK(rank(both) == 6);
    CHECK(sigma_plane(*f).dim() == 2);
  }
  CHECK_THROWS_AS(EPWPoint(std::vector<Scalar>(6, Field::rationals().zero())), InvalidInput);
}

TEST_CASE("EPW sextic restricted to lines") {
  const Field& f = Field::prime(101);
  std::mt19937_64 rng(42);
  NonSyzygeticEquation eq = random_equation(f, rng);
  RhoLagrangianData a = lagrangian_from_gale(eq, 1).first;
  for (int k = 0; k < 10; ++k) {
    EPWPoint p0 = random_point(f, rng), p1 = random_point(f, rng);
    LineDegree d = epw_line_degree(a, p0, p1);
    // Degree 6, less the multiplicity of p1 when p1 lies on the sextic.
    CHECK(d.poly.degree() + d.at_infinity == 6);
    CHECK((d.at_infinity > 0) == epw_contains(a, p1).member);
    CHECK(order_at_zero(epw_line_degree(a, p1, p0).poly) == d.at_infinity);
    // Rank oracle on each root.
    for (const Scalar& t : d.poly.roots_by_scan()) {
      std::vector<Scalar> lam = p0.lambda();
      for (std::size_t c = 0; c < 6; ++c) lam[c] += t * p1.lambda()[c];
      CHECK(epw_contains(a, EPWPoint(lam)).member);
    }
    // And conversely every scanned member is a root.
    for (long t = 0; t < 101; ++t) {
      std::vector<Scalar> lam = p0.lambda();
      for (std::size_t c = 0; c < 6; ++c) lam[c] += f.from_int(t) * p1.lambda()[c];
      bool zero = true;
      for (const auto& s : lam) zero = zero && s.is_zero();
      if (zero) continue;
      CHECK(epw_contains(a, EPWPoint(lam)).member == d.poly.evaluate(f.from_int(t)).is_zero());
    }
  }
  // A line inside Sigma lies on the sextic.
  CHECK(epw_line_degree(a, sigma_point(f, rng, false), sigma_point(f, rng, false)).poly.is_zero());
  // A Sigma point at infinity lowers the affine degree by its multiplicity.
  const EPWPoint s0 = sigma_point(f, rng, false), r0 = random_point(f, rng);
  const LineDegree at_inf = epw_line_degree(a, r0, s0);
  CHECK(at_inf.at_infinity >= 1);
  CHECK(order_at_zero(epw_line_degree(a, s0, r0).poly) == at_inf.at_infinity);
  // Through a Sigma point: t = 0 is a root.
  LineDegree through = epw_line_degree(a, sigma_point(f, rng, false), random_point(f, rng));
  CHECK(!through.poly.is_zero());
  CHECK(through.poly.evaluate(f.zero()).is_zero());
  EPWPoint p = random_point(f, rng);
  CHECK_THROWS_AS(epw_line_degree(a, p, p), InvalidInput);
}

TEST_CASE("rho-plane condition") {
  const Field& q = Field::rationals();
  std::mt19937_64 rng(43);
  NonSyzygeticEquation eq = random_equation(q, rng);
  RhoLagrangianData a = lagrangian_from_gale(eq, 2).first;
  FMatrix e = zeros(q, 6, 3), fm = zeros(q, 6, 3);
  for (std::size_t k = 0; k < 3; ++k) {
    e(k, k) = q.one();
    fm(3 + k, k) = q.one();
  }
  RhoPlaneResult re = rho_plane_condition(a, e), rf = rho_plane_condition(a, fm);
  CHECK(re.holds);
  CHECK(re.intersection_dim == 4);
  CHECK(re.wedge_space_dim == 10);
  CHECK(rf.holds);
  CHECK(rf.intersection_dim == 4);
  RhoPlaneResult rr = rho_plane_condition(a, random_matrix(q, 6, 3, rng, 5));
  CHECK(!rr.holds);
  CHECK(rr.wedge_space_dim == 10);
  CHECK_THROWS_AS(rho_plane_condition(a, zeros(q, 6, 3)), InvalidInput);
}

TEST_CASE("Pi and Gamma") {
  const Field& q = Field::rationals();
  std::mt19937_64 rng(44);
  for (int sign : {1, -1}) {
    NonSyzygeticEquation eq = random_equation(q, rng, sign);
    for (std::size_t i = 0; i < 3; ++i) {
      EPWPoint p = random_point(q, rng);
      PiGamma pg = pi_gamma(eq, i, p);
      CHECK(pg.pi_is_plane);
      CHECK(pg.gamma_is_line);
      CHECK(pg.Pi.contains(pg.Gamma));
      CHECK(cubic_polynomial(eq).substitute_linear(pg.Gamma.points()).is_zero());
    }
    // f = 0 makes M f vanish: Pi is the hyperplane L_i = 0.
    std::vector<Scalar> e = {q.one(), q.from_int(2), q.from_int(3)}, z(3, q.zero());
    EPWPoint degenerate = sign > 0 ? EPWPoint::from_ef(e, z) : EPWPoint::from_ef(z, e);
    PiGamma pg = pi_gamma(eq, 0, degenerate);
    CHECK(!pg.pi_is_plane);
    EPWPoint no_e = sign > 0 ? EPWPoint::from_ef(z, e) : EPWPoint::from_ef(e, z);
    CHECK_THROWS_AS(pi_gamma(eq, 0, no_e), InvalidInput);
  }
}

TEST_CASE("residual conics are singular on the sextic") {
  const Field& f = Field::prime(101);
  std::mt19937_64 rng(45);
  for (int sign : {1, -1}) {
    NonSyzygeticEquation eq = random_equation(f, rng, sign);
    for (std::size_t i = 0; i < 3; ++i) {
      RhoLagrangianData a = lagrangian_from_gale(eq, i).first;
      std::vector<EPWPoint> pts = harvest_epw_points(a, 20, 100 + i);
      REQUIRE(pts.size() == 20);
      int singular = 0, checked = 0;
      for (const auto& p : pts) {
        PiGamma pg = pi_gamma(eq, i, p);
        if (!pg.pi_is_plane || !pg.gamma_is_line) continue;
        ResidualConic rc = residual_conic(eq, i, p);
        ++checked;
        singular += det(rc.matrix).is_zero();
        // Evaluation oracle: F on Pi equals l * q.
        for (int k = 0; k < 3; ++k) {
          std::vector<Scalar> s = random_vec(f, rng, 3);
          Scalar lhs = cubic_polynomial(eq).evaluate(mat_vec(rc.param, s));
          CHECK(lhs == rc.line_form.evaluate(s) * rc.quadric.evaluate(s));
          Scalar qs = f.zero();
          for (std::size_t x = 0; x < 3; ++x)
            for (std::size_t y = 0; y < 3; ++y) qs += s[x] * rc.matrix(x, y) * s[y];
          CHECK(qs == rc.quadric.evaluate(s));
        }
      }
      CHECK(checked >= 18);
      CHECK(singular == checked);
    }
  }
  // Off the sextic the conic is smooth.
  const Field& q = Field::rationals();
  NonSyzygeticEquation eq = random_equation(q, rng);
  RhoLagrangianData a = lagrangian_from_gale(eq, 0).first;
  EPWPoint p = random_point(q, rng);
  REQUIRE(!epw_contains(a, p).member);
  CHECK(!det(residual_conic(eq, 0, p).matrix).is_zero());
}

TEST_CASE("Fano line correspondence") {
  const Field& f = Field::prime(101);
  std::mt19937_64 rng(46);
  int splits = 0, nonsplit = 0;
  for (int sign : {1, -1}) {
    NonSyzygeticEquation eq = random_equation(f, rng, sign);
    const MultiPoly cubic = cubic_polynomial(eq);
    for (std::size_t i = 0; i < 3; ++i) {
      RhoLagrangianData a = lagrangian_from_gale(eq, i).first;
      for (const auto& p : harvest_epw_points(a, 10, 200 + i)) {
        PiGamma pg = pi_gamma(eq, i, p);
        if (!pg.pi_is_plane || !pg.gamma_is_line) continue;
        ConicLines cl = epw_to_lines(eq, i, p);
        CHECK(cl.rank <= 2);
        if (!cl.lines) {
          REQUIRE(cl.discriminant.has_value());
          CHECK(!cl.discriminant->sqrt().has_value());
          ++nonsplit;
          continue;
        }
        ++splits;
        for (const ProjectiveSubspace* l : {&cl.lines->first, &cl.lines->second}) {
          CHECK(l->dim() == 1);
          CHECK(cubic.substitute_linear(l->points()).is_zero());
          CHECK(pg.Pi.contains(*l));
          CHECK(line_to_epw(eq, i, *l) == p);
        }
      }
    }
  }
  CHECK(splits > 0);
  CHECK(nonsplit > 0);

  // A line inside L_1 = 0 has no single intersection point.
  NonSyzygeticEquation eq = random_equation(f, rng);
  EPWPoint p = random_point(f, rng);
  PiGamma pg = pi_gamma(eq, 0, p);
  CHECK_THROWS_AS(line_to_epw(eq, 0, pg.Gamma), InvalidInput);
}

TEST_CASE("decomposable-vector sampling") {
  const Field& f = Field::prime(101);
  std::mt19937_64 rng(47);
  RhoLagrangianData a = lagrangian_from_gale(random_equation(f, rng), 0).first;
  CHECK(no_sampled_decomposable(a, 200, 5));
}
