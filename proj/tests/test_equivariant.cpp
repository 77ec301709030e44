#include <random>

#include "doctest.h"
#include "galecubic/equivariant.hpp"
#include "galecubic/exterior.hpp"

using namespace galecubic;

namespace {

FMatrix diag6(const Field& f, std::vector<long> d) {
  FMatrix m = zeros(f, 6, 6);
  for (std::size_t k = 0; k < 6; ++k) m(k, k) = f.from_int(d[k]);
  return m;
}

}  // namespace

TEST_CASE("induced action on Lambda^3") {
  const Field& f = Field::prime(97);
  CHECK(induced_lambda3(identity(f, 6)) == identity(f, 20));
  const FMatrix s = diag6(f, {5, 5, 5, 1, 1, 1});
  const FMatrix ind = induced_lambda3(s);
  // e1 e2 e3 is the first basis vector and scales by 5^3.
  CHECK(ind(0, 0) == f.from_int(125));

  const auto gens = a4_family(A4FamilyParams::example(f)).action.generators;
  for (const auto& g : gens)
    for (const auto& h : gens) CHECK(induced_lambda3(g * h) == induced_lambda3(g) * induced_lambda3(h));

  FMatrix mixed = identity(f, 6);
  mixed(0, 4) = f.one();
  CHECK_THROWS_AS(induced_lambda3(mixed), InvalidInput);
}

TEST_CASE("A4 family: stable Lagrangian and displayed matrices") {
  const Field& f = Field::prime(97);
  const A4FamilyParams p = A4FamilyParams::example(f);
  const A4Family fam = a4_family(p);
  CHECK(is_gale_pair(fam.X_E, fam.X_F));
  REQUIRE(fam.action.plus_variables.size() == 3);

  const auto [a, qp] = lagrangian_from_pair(fam.X_E, fam.X_F, 0);
  CHECK(is_g_lagrangian(a, fam.action));
  for (std::size_t k = 0; k < 3; ++k) {
    const auto r = restricted_action(qp.basis, fam.action.generators[k]);
    REQUIRE(r);
    CHECK(*r == fam.action.displayed[k]);
  }
  // Only the chi_0 line gives a stable Lagrangian.
  for (std::size_t i : {1, 2}) CHECK(!is_g_lagrangian(lagrangian_from_pair(fam.X_E, fam.X_F, i).first, fam.action));

  // Both constructions give the same subspace.
  const auto a_gale = lagrangian_from_gale(fam.X_E, 0).first;
  CHECK(rank(FMatrix::hcat(a.A, a_gale.A)) == 10);

  std::mt19937_64 rng(5);
  const NonSyzygeticEquation r = random_equation(f, rng);
  CHECK(!is_g_lagrangian(lagrangian_from_gale(r, 0).first, fam.action));
  GroupActionData trivial;
  trivial.generators = {identity(f, 6)};
  CHECK(is_g_lagrangian(lagrangian_from_gale(r, 0).first, trivial));
}

TEST_CASE("A4 relations") {
  const Field& f = Field::prime(97);
  const auto d = a4_displayed_generators(f, A4FamilyParams::example(f).xi);
  const A4Relations rel = check_a4_relations(d[0], d[1], d[2]);
  CHECK(rel.a2);
  CHECK(rel.b2);
  CHECK(rel.ab2);
  CHECK(rel.c3);
  CHECK(rel.cinv_a_c_is_b);
  CHECK(rel.cinv_b_c_is_ab);
  CHECK(!rel.c_a_cinv_is_b);
  CHECK(rel.presents_a4());

  const auto v = a4_generators_v(f);
  const A4Relations rv = check_a4_relations(v[0], v[1], v[2]);
  CHECK(rv.presents_a4());
}

TEST_CASE("invariance of both cubics") {
  for (const Field* f : {&Field::prime(97), &Field::cyclotomic3(Field::rationals())}) {
    const A4Family fam = a4_family(A4FamilyParams::example(*f));
    REQUIRE(fam.action.plus_variables.size() == 3);
    for (const auto& [eq, acts] : {std::pair{&fam.X_E, &fam.action.plus_variables},
                                   std::pair{&fam.X_F, &fam.action.minus_variables}}) {
      for (const auto& r : invariance_scalars(cubic_polynomial(*eq), *acts, fam.action.names)) {
        CHECK(r.invariant);
        if (r.scalar) CHECK(*r.scalar == f->one());
      }
    }
  }
  // Perturbing one entry breaks invariance under some generator.
  const Field& f = Field::prime(97);
  A4Family fam = a4_family(A4FamilyParams::example(f));
  fam.X_E.forms[1][1] += f.one();
  bool all = true;
  for (const auto& r : invariance_scalars(cubic_polynomial(fam.X_E), fam.action.plus_variables, {}))
    all = all && r.invariant;
  CHECK(!all);
}

TEST_CASE("equivariance of the EPW to Fano correspondence") {
  const Field& f = Field::prime(97);
  const A4Family fam = a4_family(A4FamilyParams::example(f));
  for (const auto* eq : {&fam.X_E, &fam.X_F}) {
    const EquivarianceReport rep = equivariance_probe(*eq, 0, fam.action, 40, 11);
    INFO(rep.error);
    CHECK(rep.a_stable);
    CHECK(rep.points >= 10);
    CHECK(rep.commutes());
    for (auto ok : rep.per_generator_ok) CHECK(ok == rep.points);
  }

  // A perturbed cubic with the same claimed action does not commute.
  A4Family bad = fam;
  bad.X_E.forms[1][1] += f.one();
  const EquivarianceReport rep = equivariance_probe(bad.X_E, 0, fam.action, 40, 11);
  CHECK(!rep.commutes());
}
