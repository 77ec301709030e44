#include <random>

#include "doctest.h"
#include "galecubic/gale.hpp"
#include "helpers.hpp"

using namespace galecubic;
using namespace testutil;

namespace {

std::vector<Scalar> unit(const Field& f, int i) {
  std::vector<Scalar> v(6, f.zero());
  v[i] = f.one();
  return v;
}

NonSyzygeticEquation diagonal_equation(const Field& f) {
  std::vector<std::vector<Scalar>> forms(12, std::vector<Scalar>(6, f.zero()));
  for (int i = 0; i < 3; ++i) forms[NonSyzygeticEquation::m_slot(i, i)] = unit(f, i);
  for (int i = 0; i < 3; ++i) forms[NonSyzygeticEquation::l_slot(i)] = unit(f, 3 + i);
  return NonSyzygeticEquation(f, forms, 1);
}

}  // namespace

TEST_CASE("coefficient map and cubic of the diagonal tuple") {
  const Field& q = Field::rationals();
  NonSyzygeticEquation eq = diagonal_equation(q);
  FMatrix c = coefficient_map(eq);
  int nonzero_cols = 0;
  for (std::size_t j = 0; j < 12; ++j) {
    int nz = 0;
    for (std::size_t i = 0; i < 6; ++i) nz += !c(i, j).is_zero();
    nonzero_cols += nz > 0;
  }
  CHECK(nonzero_cols == 6);
  CHECK(rank(c) == 6);

  auto x = [&](int i) { return MultiPoly::variable(q, 6, i); };
  CHECK(cubic_polynomial(eq) == x(0) * x(1) * x(2) + x(3) * x(4) * x(5));

  NonSyzygeticEquation zl = eq;
  zl.forms[NonSyzygeticEquation::l_slot(2)] = std::vector<Scalar>(6, q.zero());
  CHECK(is_zero(coefficient_map(zl).col_block(11, 1)));

  NonSyzygeticEquation zm = eq;
  for (int s = 0; s < 9; ++s) zm.forms[s] = std::vector<Scalar>(6, q.zero());
  zm.sign = -1;
  CHECK(cubic_polynomial(zm) == -(x(3) * x(4) * x(5)));
}

TEST_CASE("gale_dual rejects degenerate tuples") {
  const Field& q = Field::rationals();
  std::mt19937_64 rng(11);
  NonSyzygeticEquation eq = random_equation(q, rng);
  // Two equal rows of M and L-forms in their span: rank drops.
  for (int j = 0; j < 3; ++j) eq.forms[NonSyzygeticEquation::m_slot(1, j)] = eq.M(0, j);
  for (int j = 0; j < 3; ++j) eq.forms[NonSyzygeticEquation::m_slot(2, j)] = eq.M(0, j);
  for (int k = 0; k < 3; ++k) eq.forms[NonSyzygeticEquation::l_slot(k)] = eq.M(0, k);
  REQUIRE(rank(coefficient_map(eq)) < 6);
  try {
    gale_dual(eq);
    FAIL("expected an exception");
  } catch (const InvalidInput& e) {
    CHECK(std::string(e.what()).find("degenerate tuple") != std::string::npos);
  }
}

TEST_CASE("gale duality: composition zero and double dual") {
  std::mt19937_64 rng(12);
  for (const Field* f : {&Field::rationals(), &Field::prime(101), &Field::cyclotomic3(Field::rationals())}) {
    for (int k = 0; k < 40; ++k) {
      NonSyzygeticEquation eq = random_equation(*f, rng, k % 2 ? 1 : -1);
      NonSyzygeticEquation d = gale_dual(eq);
      CHECK(d.sign == -eq.sign);
      CHECK(composition_zero(eq, d));
      CHECK(is_gale_pair(eq, d));
      NonSyzygeticEquation dd = gale_dual(d);
      CHECK(same_row_space(coefficient_map(dd), coefficient_map(eq)));
      CHECK(dd.sign == eq.sign);
      MultiPoly cd = cubic_polynomial(d);
      CHECK(cd.is_homogeneous());
    }
  }
}

TEST_CASE("reordering the L-forms reorders the dual L-forms") {
  const Field& f = Field::prime(101);
  std::mt19937_64 rng(13);
  for (int k = 0; k < 20; ++k) {
    NonSyzygeticEquation eq = random_equation(f, rng);
    NonSyzygeticEquation p = eq;
    p.forms[9] = eq.forms[11];
    p.forms[10] = eq.forms[9];
    p.forms[11] = eq.forms[10];
    CHECK(cubic_polynomial(p) == cubic_polynomial(eq));
    NonSyzygeticEquation d = gale_dual(eq), dp = gale_dual(p);
    // dp with its L's put back in eq's order spans the same space as d.
    NonSyzygeticEquation back = dp;
    back.forms[11] = dp.forms[9];
    back.forms[9] = dp.forms[10];
    back.forms[10] = dp.forms[11];
    CHECK(same_row_space(coefficient_map(back), coefficient_map(d)));
    CHECK(equivalent_equations(d, dp).equivalent);
  }
}

TEST_CASE("equivalence detects coordinate changes") {
  const Field& q = Field::rationals();
  std::mt19937_64 rng(14);
  NonSyzygeticEquation eq = random_equation(q, rng);
  FMatrix g = random_matrix(q, 6, 6, rng, 3);
  while (rank(g) < 6) g = random_matrix(q, 6, 6, rng, 3);
  NonSyzygeticEquation moved = from_coefficient_map(g * coefficient_map(eq), 1);
  Equivalence e = equivalent_equations(eq, moved);
  CHECK(e.equivalent);
  NonSyzygeticEquation flipped = moved;
  flipped.sign = -1;
  CHECK(!equivalent_equations(eq, flipped).equivalent);
}

TEST_CASE("scroll membership") {
  const Field& f = Field::prime(101);
  std::mt19937_64 rng(15);
  for (int k = 0; k < 10; ++k) {
    NonSyzygeticEquation eq = random_equation(f, rng);
    for (std::size_t i = 0; i < 3; ++i) {
      for (auto [r1, r2] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
        FMatrix rows = zeros(f, 2, 3);
        rows(0, r1) = f.one();
        rows(1, r2) = f.one();
        auto cert = scroll_membership(eq, i, rows);
        REQUIRE(cert.has_value());
        MultiPoly lhs = MultiPoly::linear_form(f, eq.L(i)) * cert->quadric;
        for (int m = 0; m < 3; ++m) lhs += cert->minors[m] * cert->linear[m];
        CHECK(lhs == cubic_polynomial(eq).with_names(lhs.names()));
      }
    }
    // Generalized rows (row1 + t row2, row2).
    FMatrix rows = zeros(f, 2, 3);
    rows(0, 0) = f.one();
    rows(0, 1) = random_nonzero(f, rng, 50);
    rows(1, 1) = f.one();
    CHECK(scroll_membership(eq, 0, rows).has_value());
  }
  // A random cubic not vanishing on the scroll is rejected.
  NonSyzygeticEquation eq = random_equation(f, rng);
  MultiPoly cubic(f, 6);
  for (const auto& e : monomials_of_degree(6, 3)) cubic.add_term(e, random_scalar(f, rng, 50));
  FMatrix rows = zeros(f, 2, 3);
  rows(0, 0) = f.one();
  rows(1, 1) = f.one();
  // Oracle: a point of the scroll, i.e. L_1 = 0 and s*row1 + t*row2 = 0.
  const Scalar s = random_nonzero(f, rng), t = random_nonzero(f, rng);
  FMatrix sys = zeros(f, 4, 6);
  for (int c = 0; c < 3; ++c)
    for (int v = 0; v < 6; ++v) sys(c, v) = s * eq.M(0, c)[v] + t * eq.M(1, c)[v];
  sys.set_row(3, eq.L(0));
  FMatrix pts = kernel_basis(sys);
  REQUIRE(pts.cols() >= 1);
  std::vector<Scalar> pt = pts.col(0);
  CHECK(cubic_polynomial(eq).evaluate(pt).is_zero());
  const bool off_scroll = !cubic.evaluate(pt).is_zero();
  if (off_scroll) CHECK(!scroll_membership(cubic, eq, 0, rows).has_value());

  FMatrix dependent = zeros(f, 2, 3);
  dependent(0, 0) = f.one();
  dependent(1, 0) = f.from_int(2);
  CHECK_THROWS_AS(scroll_membership(eq, 0, dependent), InvalidInput);
}
