#include <random>

#include "doctest.h"
#include "galecubic/invariants.hpp"
#include "helpers.hpp"

using namespace galecubic;
using namespace testutil;

namespace {

FMatrix random_sl3(const Field& f, std::mt19937_64& rng) {
  for (;;) {
    FMatrix g = random_matrix(f, 3, 3, rng, 4);
    const Scalar d = det(g);
    if (d.is_zero()) continue;
    for (std::size_t j = 0; j < 3; ++j) g(0, j) = g(0, j) / d;
    return g;
  }
}

std::vector<Scalar> random_point(const Field& f, std::mt19937_64& rng, std::size_t n) {
  std::vector<Scalar> x;
  for (std::size_t i = 0; i < n; ++i) x.push_back(random_scalar(f, rng, 9));
  return x;
}

}  // namespace

TEST_CASE("sigma quadric") {
  for (const Field* f : {&Field::rationals(), &Field::prime(97)}) {
    const MultiPoly s = sigma_quadric(*f);
    CHECK(s.is_homogeneous());
    CHECK(s.total_degree() == 2);
    CHECK((s - sigma_trace_form(*f)).is_zero());
    // Zero on U_E.
    std::mt19937_64 rng(31);
    const FMatrix ue = U_E(*f);
    CHECK(s.evaluate(mat_vec(ue, random_point(*f, rng, 10))).is_zero());
  }
}

TEST_CASE("induced action agrees with wedges of images") {
  const Field& q = Field::rationals();
  std::mt19937_64 rng(32);
  const FMatrix g = random_sl3(q, rng), h = random_sl3(q, rng);
  const FMatrix t = g33_action(g, h);
  FMatrix block = zeros(q, 6, 6);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      block(i, j) = g(i, j);
      block(3 + i, 3 + j) = h(i, j);
    }
  for (int k = 0; k < 5; ++k) {
    std::vector<ExteriorElement> vs, images;
    for (int m = 0; m < 3; ++m) {
      std::vector<Scalar> v = random_point(q, rng, 6);
      vs.push_back(ExteriorElement(1, v));
      images.push_back(ExteriorElement(1, mat_vec(block, v)));
    }
    const ExteriorElement x = wedge(wedge(vs[0], vs[1]), vs[2]);
    const ExteriorElement y = wedge(wedge(images[0], images[1]), images[2]);
    CHECK(mat_vec(t, x.coeffs()) == y.coeffs());
  }
}

TEST_CASE("G33 invariance of sigma and the generators") {
  std::mt19937_64 rng(33);
  for (const Field* f : {&Field::rationals(), &Field::prime(97)}) {
    const MultiPoly s = sigma_quadric(*f);
    const auto [xe, xf] = big_cubics(*f);
    for (int k = 0; k < 50; ++k) {
      const FMatrix t = g33_action(random_sl3(*f, rng), random_sl3(*f, rng));
      CHECK(fixed_by(s, t));
      if (k < 5) {
        CHECK(fixed_by(xe, t));
        CHECK(fixed_by(xf, t));
      }
    }
    for (int k = 0; k < 5; ++k) {
      const FMatrix g = random_sl3(*f, rng), h = random_sl3(*f, rng);
      GeneratorReport rep = generator_invariance(g, h);
      CHECK(rep.results.size() == 5);
      CHECK(rep.all_invariant());
    }
    CHECK(generator_invariance(identity(*f, 3), identity(*f, 3)).all_invariant());
  }
}

TEST_CASE("non-unimodular elements scale the generators") {
  const Field& q = Field::rationals();
  FMatrix g = identity(q, 3);
  g(0, 0) = q.from_int(2);
  CHECK_THROWS_AS(generator_invariance(g, identity(q, 3)), InvalidInput);
  GeneratorReport rep = generator_scalars(g, identity(q, 3));
  CHECK(!rep.all_invariant());
  for (const auto& r : rep.results) CHECK(r.scalar.has_value());
  // det M_E has entries of Lambda^2 E, so it picks up det(g)^2.
  CHECK(rep.results[3].name == "det M_E");
  CHECK(*rep.results[3].scalar == q.from_int(4));
  CHECK(*rep.results[0].scalar == q.from_int(2));
}

TEST_CASE("big cubics") {
  const Field& f = Field::prime(101);
  const auto [xe, xf] = big_cubics(f);
  CHECK(xe.is_homogeneous());
  CHECK(xe.total_degree() == 3);
  CHECK(xf.total_degree() == 3);
  const FramePolys fp = frame_polys(f);
  // On L_E = sigma = 0 the E-cubic is 2 det M_E: check on random points of U_E with L_E = 0.
  std::mt19937_64 rng(34);
  for (int k = 0; k < 10; ++k) {
    std::vector<Scalar> c = random_point(f, rng, 10);
    c[9] = f.zero();
    const std::vector<Scalar> x = mat_vec(U_E(f), c);
    CHECK(xe.evaluate(x) == det(fp.mE).evaluate(x) * f.from_int(2));
  }
}

TEST_CASE("projection of the big cubics") {
  std::mt19937_64 rng(35);
  int cones = 0;
  for (const Field* f : {&Field::rationals(), &Field::prime(101)}) {
    for (int k = 0; k < 25; ++k) {
      NonSyzygeticEquation eq = random_equation(*f, rng, k % 2 ? 1 : -1);
      const std::size_t i = static_cast<std::size_t>(k % 3);
      RhoLagrangianData a = lagrangian_from_gale(eq, i).first;
      // Move A by a random G33 element; rho-Lagrangians are preserved.
      const FMatrix t = g33_action(random_sl3(*f, rng), random_sl3(*f, rng));
      RhoLagrangianData moved = validate(t * a.A);
      const NonSyzygeticEquation& plus = eq.sign > 0 ? eq : gale_dual(eq);
      const NonSyzygeticEquation& minus = eq.sign > 0 ? gale_dual(eq) : eq;
      ProjectedCubics pa = project_cubics(a), pm = project_cubics(moved);
      for (const ProjectedCubics* pc : {&pa, &pm}) {
        cones += pc->cone_E && pc->cone_F;
        CHECK(pc->X_E.sign == 1);
        CHECK(pc->X_F.sign == -1);
        CHECK(composition_zero(pc->X_E, pc->X_F));
      }
      CHECK(equivalent_equations(pa.X_E, plus).equivalent);
      CHECK(equivalent_equations(pa.X_F, minus).equivalent);
      // Oracle for the moved subspace: its adapted basis is t B r for some r,
      // and by invariance the restricted cubics differ by the substitution r.
      const FMatrix b = gale_from_lagrangian(a).presentation.basis;
      const FMatrix bm = gale_from_lagrangian(moved).presentation.basis;
      auto r = solve(t * b, bm);
      REQUIRE(r.has_value());
      CHECK(pa.restricted_E.substitute_linear(*r) == pm.restricted_E);
      CHECK(pa.restricted_F.substitute_linear(*r) == pm.restricted_F);
    }
  }
  CHECK(cones == 100);
}
