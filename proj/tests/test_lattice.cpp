#include <algorithm>
#include <set>

#include "doctest.h"
#include "galecubic/field.hpp"
#include "galecubic/lattice.hpp"

using namespace galecubic;

namespace {

// Multiset of q-values on Z^2 / G Z^2 for a 2x2 Gram matrix, from explicit
// coset representatives and the adjugate formula for G^-1.
std::multiset<mpq_class> q_values_oracle(const IntMatrix& g) {
  const long det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
  const long n = std::labs(det);
  auto in_lattice = [&](long x0, long x1) {
    // G^-1 x = adj(G) x / det integral.
    return (g[1][1] * x0 - g[0][1] * x1) % det == 0 && (-g[1][0] * x0 + g[0][0] * x1) % det == 0;
  };
  std::vector<std::pair<long, long>> reps;
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b) {
      bool fresh = true;
      for (auto [c, d] : reps) fresh = fresh && !in_lattice(a - c, b - d);
      if (fresh) reps.emplace_back(a, b);
    }
  std::multiset<mpq_class> out;
  for (auto [a, b] : reps) {
    mpq_class v(g[1][1] * a * a - 2 * g[0][1] * a * b + g[0][0] * b * b, det);
    v.canonicalize();
    out.insert(reduce_mod(v, 2));
  }
  return out;
}

std::set<std::vector<std::size_t>> as_set(const std::vector<GlueGroup>& gs) {
  std::set<std::vector<std::size_t>> out;
  for (const auto& g : gs) out.insert(g.elements);
  return out;
}

}  // namespace

TEST_CASE("discriminant forms") {
  FiniteQuadraticModule z2 = discriminant_form({{2}});
  CHECK(z2.orders() == std::vector<int>{2});
  CHECK(z2.q(z2.generator(0)) == mpq_class(1, 2));

  FiniteQuadraticModule a2 = discriminant_form(a2_gram(2));
  CHECK(a2.size() == 12);
  CHECK(a2.orders() == std::vector<int>{2, 2, 3});
  CHECK(gram_determinant(nonsyzygetic_intersection_matrix()) == 36);
  CHECK_THROWS_AS(discriminant_form(nonsyzygetic_intersection_matrix()), InvalidInput);
  CHECK_THROWS_AS(discriminant_form({{2, 1}, {1, 2}, {0, 0}}), InvalidInput);
  CHECK_THROWS_AS(discriminant_form({{2, 2}, {2, 2}}), InvalidInput);
  CHECK_THROWS_AS(FiniteQuadraticModule::cyclic(3, mpq_class(-1, 3)), InvalidInput);

  for (const IntMatrix& g : {a2_gram(2), a2_gram(-2), IntMatrix{{4, 1}, {1, 6}}, IntMatrix{{2, 0}, {0, -6}}}) {
    FiniteQuadraticModule d = discriminant_form(g);
    CHECK(mpz_class(d.size()) == abs(gram_determinant(g)));
    std::multiset<mpq_class> got;
    for (const auto& x : d.elements()) got.insert(d.q(x));
    CHECK(got == q_values_oracle(g));
    for (const auto& x : d.elements()) {
      for (long n = 0; n < 7; ++n) CHECK(d.q(d.scale(n, x)) == reduce_mod(d.q(x) * n * n, 2));
      for (const auto& y : d.elements())
        CHECK(d.b(x, y) == reduce_mod((d.q(d.add(x, y)) - d.q(x) - d.q(y)) / 2, 1));
    }
  }
}

TEST_CASE("D(S), D(T) and the transcendental form") {
  const DSDT d = build_DS_DT();
  CHECK(d.ds.size() == 12);
  CHECK(d.dt.size() == 36);
  // [S* + T* : S + T] = |H|^2 * disc(L).
  CHECK(d.ds.size() * d.dt.size() == 12 * 12 * 3);
  CHECK(d.ds.orders() == std::vector<int>{2, 2, 3});
  CHECK(d.dt.orders() == std::vector<int>{2, 2, 3, 3});
  // Every nonzero 2-torsion element has q = 1; the 3-torsion of D(S) has q = 2/3.
  CHECK(d.ds.q({1, 0, 0}) == 1);
  CHECK(d.ds.q({1, 1, 0}) == 1);
  CHECK(d.ds.q({0, 0, 1}) == mpq_class(2, 3));

  const FiniteQuadraticModule tx = transcendental_form();
  const Element alpha{0, 0, 0, 1};
  CHECK(tx.b(alpha, alpha) == reduce_mod(mpq_class(-1, 3), 1));
  CHECK(tx.q(alpha) == mpq_class(2, 3));
  const FiniteQuadraticModule neg = d.dt.negated();
  for (const auto& x : tx.elements()) CHECK(tx.q(x) == neg.q(x));
}

TEST_CASE("isometries of S and D(S)") {
  const DSDT d = build_DS_DT();
  const std::vector<IntMatrix> os = lattice_isometries(a2_gram(-2));
  CHECK(os.size() == 12);
  const std::vector<ModuleMap> od = isometries(d.ds);
  CHECK(od.size() == 12);
  std::set<std::vector<Element>> induced;
  for (const auto& g : os) {
    ModuleMap m = induced_map(a2_gram(-2), d.ds, g);
    for (const auto& x : d.ds.elements()) CHECK(d.ds.q(m.apply(d.ds, x)) == d.ds.q(x));
    induced.insert(m.images);
  }
  CHECK(induced.size() == 12);
}

TEST_CASE("glue groups") {
  const DSDT d = build_DS_DT();
  const GlueEnumeration e = enumerate_glue_groups(d);
  CHECK(e.targets.size() == 2);
  CHECK(e.isometry_count == 12);
  REQUIRE(e.groups.size() == 24);
  for (const auto& g : e.groups) CHECK(is_glue_group(d, g));
  const auto structured = as_set(e.groups);
  CHECK(structured.size() == 24);

  const std::vector<GlueGroup> brute = brute_force_glue_groups(d);
  CHECK(brute.size() == 24);
  CHECK(as_set(brute) == structured);

  const std::vector<GlueGroup> param = parametrized_glue_groups(d);
  CHECK(param.size() == 24);
  for (const auto& g : param) CHECK(is_glue_group(d, g));
  CHECK(as_set(param) == structured);

  // The diagonal Z/3 in D(T) is not anti-isometric to the Z/3 of D(S).
  const std::vector<std::size_t> diagonal = subgroup_closure(d.dt, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 1}});
  CHECK(diagonal.size() == 12);
  CHECK(anti_isometries(d.ds, d.dt, diagonal).empty());
  CHECK(std::find(e.targets.begin(), e.targets.end(), diagonal) == e.targets.end());
}

TEST_CASE("orbits and the partner count") {
  const DSDT d = build_DS_DT();
  const std::vector<GlueGroup> groups = enumerate_glue_groups(d).groups;
  const OrbitDecomposition o = group_action_orbits(d, groups);
  CHECK(o.group_order == 24);
  REQUIRE(o.orbits.size() == 2);
  std::size_t total = 0;
  for (const auto& orbit : o.orbits) {
    CHECK(orbit.members.size() == 12);
    total += orbit.members.size();
    CHECK(orbit.stabilizer.size() == 2);
    for (const auto& g : orbit.stabilizer) CHECK(g.is_plus_minus_identity());
  }
  CHECK(total == 24);
  CHECK(o.fm_partner_count() == 2);
}
