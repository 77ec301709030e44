#include <random>

#include "doctest.h"
#include "galecubic/gmlink.hpp"
#include "galecubic/invariants.hpp"
#include "helpers.hpp"

using namespace galecubic;
using namespace testutil;

TEST_CASE("the skew matrix N15") {
  const Field& q = Field::rationals();
  const Matrix<MultiPoly> n = build_n15(q);
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(n(i, i).is_zero());
    for (std::size_t j = 0; j < 5; ++j) CHECK((n(i, j) + n(j, i)).is_zero());
  }
  // v1 ^ v2 ^ e1 = e2 ^ e3 ^ e1 = e1 ^ e2 ^ e3.
  std::vector<Scalar> x = ExteriorElement::basis(q, 0b000111).coeffs();
  CHECK(n(0, 1).evaluate(x) == q.one());
  CHECK(orientation_pair(ExteriorElement::basis(q, 0b000111), ExteriorElement::basis(q, 0b111000)) == q.one());
  for (const auto& p : z15_ideal(q)) {
    CHECK(p.is_homogeneous());
    CHECK(p.total_degree() == 2);
  }
}

TEST_CASE("dual ten-tuples and sigma15") {
  std::mt19937_64 rng(51);
  for (Splitting15 s : {kSideE, kSideF}) {
    const Field& q = Field::rationals();
    const DualTuples15 t = dual_tuples15(q, s);
    REQUIRE(t.u.size() == 10);
    REQUIRE(t.uhat.size() == 10);
    for (std::size_t i = 0; i < 10; ++i)
      for (std::size_t j = 0; j < 10; ++j) CHECK(wedge(t.u[i], t.uhat[j]) == (i == j ? t.top : ExteriorElement(q, 6)));
    const MultiPoly sigma = build_sigma15(q, s);
    // Supported on the U side only.
    std::vector<Scalar> x(20, q.zero());
    for (const auto& u : t.u) {
      const Scalar c = random_scalar(q, rng, 9);
      for (std::size_t k = 0; k < 20; ++k) x[k] += c * u.coeffs()[k];
    }
    CHECK(sigma.evaluate(x).is_zero());
    // SL(V5) acting on v1..v5 and fixing the distinguished vector.
    for (int k = 0; k < 5; ++k) {
      FMatrix g = random_matrix(q, 5, 5, rng, 3);
      const Scalar d = det(g);
      if (d.is_zero()) continue;
      for (std::size_t c = 0; c < 5; ++c) g(0, c) = g(0, c) / d;
      const std::vector<int> v = s.v();
      FMatrix block = zeros(q, 6, 6);
      block(s.distinguished, s.distinguished) = q.one();
      for (std::size_t r = 0; r < 5; ++r)
        for (std::size_t c = 0; c < 5; ++c) block(v[r], v[c]) = g(r, c);
      CHECK(fixed_by(sigma, induced_action(block, 3)));
    }
  }
}

TEST_CASE("degree-3 ideal membership") {
  const Field& q = Field::rationals();
  const std::vector<MultiPoly> ideal_e = z15_ideal(q, kSideE);
  const auto [xe, xf] = big_cubics(q);

  auto cert = ideal_membership_deg3(xe, ideal_e);
  REQUIRE(cert.has_value());
  CHECK(verify_certificate(xe, ideal_e, *cert));

  const std::vector<MultiPoly> ideal_f = z15_ideal(q, kSideF);
  auto cert_f = ideal_membership_deg3(xf, ideal_f);
  REQUIRE(cert_f.has_value());
  CHECK(verify_certificate(xf, ideal_f, *cert_f));

  // Trivial certificate.
  const MultiPoly x0 = MultiPoly::variable(q, 20, 0).with_names(lambda3_names());
  auto triv = ideal_membership_deg3(ideal_e[0] * x0, ideal_e);
  REQUIRE(triv.has_value());
  CHECK(verify_certificate(ideal_e[0] * x0, ideal_e, *triv));

  // A random cubic is not in the ideal.
  std::mt19937_64 rng(52);
  MultiPoly r(q, lambda3_names());
  for (int k = 0; k < 30; ++k) {
    Exponent e(20, 0);
    for (int m = 0; m < 3; ++m) ++e[rng() % 20];
    r.add_term(e, random_nonzero(q, rng, 20));
  }
  CHECK(!ideal_membership_deg3(r, ideal_e).has_value());
  CHECK_THROWS_AS(ideal_membership_deg3(x0, ideal_e), InvalidInput);
}
