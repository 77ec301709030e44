#include <random>

#include "doctest.h"
#include "galecubic/exterior.hpp"
#include "galecubic/matrix.hpp"
#include "galecubic/poly.hpp"
#include "helpers.hpp"

using namespace galecubic;
using namespace testutil;

namespace {

// Plain Gaussian elimination over Z/p on int64, written independently of
// row_reduce, used as a rank oracle.
std::size_t rank_mod_p(std::vector<std::vector<std::int64_t>> a, std::int64_t p) {
  auto inv = [p](std::int64_t x) {
    std::int64_t r = 1, b = x % p, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  std::size_t rank = 0;
  const std::size_t R = a.size(), C = R ? a[0].size() : 0;
  for (std::size_t c = 0; c < C && rank < R; ++c) {
    std::size_t piv = rank;
    while (piv < R && a[piv][c] % p == 0) ++piv;
    if (piv == R) continue;
    std::swap(a[piv], a[rank]);
    const std::int64_t iv = inv(((a[rank][c] % p) + p) % p);
    for (std::size_t i = rank + 1; i < R; ++i) {
      const std::int64_t k = ((a[i][c] % p + p) % p) * iv % p;
      for (std::size_t j = 0; j < C; ++j) a[i][j] = ((a[i][j] - k * a[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

Matrix<MultiPoly> poly_matrix(const FMatrix& m) {
  const Field& f = m(0, 0).field();
  Matrix<MultiPoly> out(m.rows(), m.cols(), MultiPoly(f, 1));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = MultiPoly::constant(f, 1, m(i, j));
  return out;
}

}  // namespace

TEST_CASE("field axioms hold on random samples") {
  std::mt19937_64 rng(1);
  for (const Field* f : field_kinds()) {
    for (int k = 0; k < 200; ++k) {
      Scalar a = random_scalar(*f, rng), b = random_scalar(*f, rng), c = random_scalar(*f, rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    }
  }
}

TEST_CASE("cube roots of unity") {
  for (const Field* f : {&Field::cyclotomic3(Field::rationals()), &Field::cyclotomic3(Field::prime(5)),
                         &Field::cyclotomic3(Field::prime(97))}) {
    Scalar xi = f->xi();
    CHECK(xi.pow(3).is_one());
    CHECK(!xi.is_one());
  }
  // p = 1 mod 3 realizes xi in the ground field; roots by direct scan.
  const Field& f97 = Field::cyclotomic3(Field::prime(97));
  CHECK(f97 == Field::prime(97));
  std::vector<std::int64_t> scan;
  for (std::int64_t x = 0; x < 97; ++x)
    if ((x * x + x + 1) % 97 == 0) scan.push_back(x);
  CHECK(f97.xi_roots() == scan);
  CHECK(scan == std::vector<std::int64_t>{35, 61});
  CHECK(f97.xi().to_residue() == 35);
  CHECK(Field::cyclotomic3(Field::prime(5)).is_extension());
  CHECK_THROWS_AS(Field::cyclotomic3(Field::prime(3)), InvalidInput);
  CHECK_THROWS_AS(Field::prime(91), InvalidInput);
}

TEST_CASE("square roots") {
  std::mt19937_64 rng(2);
  for (const Field* f : field_kinds()) {
    for (int k = 0; k < 50; ++k) {
      Scalar a = random_scalar(*f, rng);
      auto r = (a * a).sqrt();
      REQUIRE(r.has_value());
      CHECK(*r * *r == a * a);
    }
  }
  CHECK(!Field::rationals().from_int(2).sqrt().has_value());
  const Field& q3 = Field::cyclotomic3(Field::rationals());
  auto s = q3.from_int(-3).sqrt();
  REQUIRE(s.has_value());
  CHECK(*s * *s == q3.from_int(-3));
}

TEST_CASE("kernel_basis") {
  const Field& f = Field::prime(101);
  CHECK(kernel_basis(identity(f, 6)).cols() == 0);
  FMatrix z = zeros(f, 6, 12);
  CHECK(kernel_basis(z) == identity(f, 12));

  std::mt19937_64 rng(3);
  for (const Field* fk : field_kinds()) {
    for (int k = 0; k < 200; ++k) {
      const std::size_t r = 1 + rng() % 7, c = 1 + rng() % 12;
      FMatrix m = random_matrix(*fk, r, c, rng, k % 3 == 0 ? 1 : 9);
      FMatrix kb = kernel_basis(m);
      if (kb.cols()) CHECK(is_zero(m * kb));
      CHECK(rank(kb) == kb.cols());
      CHECK(kb.cols() == c - rank(m));
    }
  }
  // Independent rank oracle over F_101.
  for (int k = 0; k < 50; ++k) {
    FMatrix m = random_matrix(f, 6, 12, rng, 50);
    std::vector<std::vector<std::int64_t>> raw(6, std::vector<std::int64_t>(12));
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 12; ++j) raw[i][j] = m(i, j).to_residue();
    CHECK(rank(m) == rank_mod_p(raw, 101));
    FMatrix kb = kernel_basis(m);
    CHECK(kb.cols() == 12 - rank_mod_p(raw, 101));
    CHECK(is_zero(m * kb));
  }
}

TEST_CASE("determinants") {
  const Field& q = Field::rationals();
  CHECK(det(identity(q, 3)).is_one());
  std::mt19937_64 rng(4);
  for (int k = 0; k < 50; ++k) {
    FMatrix m = random_matrix(q, 4, 4, rng);
    CHECK(det(m) == cofactor_det(m, q.one()));
    // Polynomial path (constants) agrees with the field path.
    MultiPoly pd = det(poly_matrix(m));
    CHECK(pd.coefficient(Exponent{0}) == det(m));
  }
  for (int k = 0; k < 20; ++k) {
    FMatrix m = random_matrix(q, 6, 6, rng);
    CHECK(det(poly_matrix(m)).coefficient(Exponent{0}) == cofactor_det(m, q.one()));
  }
  // diag(L1, L2, L3) -> L1 L2 L3
  Matrix<MultiPoly> d(3, 3, MultiPoly(q, 6));
  MultiPoly prod = MultiPoly::constant(q, 6, q.one());
  for (int i = 0; i < 3; ++i) {
    d(i, i) = MultiPoly::variable(q, 6, i) + MultiPoly::variable(q, 6, i + 3);
    prod = prod * d(i, i);
  }
  CHECK(det(d) == prod);
  CHECK_THROWS_AS(det(zeros(q, 2, 3)), InvalidInput);
}

TEST_CASE("pfaffian4") {
  const Field& q = Field::rationals();
  MultiPoly a = MultiPoly::variable(q, 2, 0), b = MultiPoly::variable(q, 2, 1), zero(q, 2);
  Matrix<MultiPoly> m(4, 4, zero);
  m(0, 1) = a;
  m(1, 0) = -a;
  m(2, 3) = b;
  m(3, 2) = -b;
  CHECK(pfaffian4(m) == a * b);
  CHECK(pfaffian4(zeros(q, 4, 4)).is_zero());
  std::mt19937_64 rng(5);
  for (const Field* f : {&Field::rationals(), &Field::prime(97)}) {
    for (int k = 0; k < 100; ++k) {
      FMatrix s = zeros(*f, 4, 4);
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
          s(i, j) = random_scalar(*f, rng);
          s(j, i) = -s(i, j);
        }
      Scalar pf = pfaffian4(s);
      CHECK(pf * pf == det(s));
    }
  }
  FMatrix bad = identity(q, 4);
  CHECK_THROWS_AS(pfaffian4(bad), InvalidInput);
}

TEST_CASE("polynomial arithmetic") {
  const Field& f = Field::prime(97);
  std::mt19937_64 rng(6);
  auto rand_poly = [&](int deg) {
    MultiPoly p(f, 3);
    for (int t = 0; t < 6; ++t) {
      Exponent e(3);
      int left = deg;
      for (int i = 0; i < 3; ++i) {
        e[i] = static_cast<std::uint16_t>(rng() % (left + 1));
        left -= e[i];
      }
      p.add_term(e, random_scalar(f, rng));
    }
    return p;
  };
  for (int k = 0; k < 50; ++k) {
    MultiPoly a = rand_poly(3), b = rand_poly(2), c = rand_poly(2);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    for (std::size_t v = 0; v < 3; ++v)
      CHECK((a * b).derivative(v) == a.derivative(v) * b + a * b.derivative(v));
    if (!b.is_zero()) {
      auto q = (a * b).divide_exact(b);
      REQUIRE(q.has_value());
      CHECK(*q == a);
    }
    std::vector<Scalar> pt{random_scalar(f, rng), random_scalar(f, rng), random_scalar(f, rng)};
    CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
  }
  MultiPoly x = MultiPoly::variable(f, 2, 0), y = MultiPoly::variable(f, 2, 1);
  CHECK(!(x * x + y).divide_exact(x).has_value());
  CHECK(MultiPoly::proportional(x * f.from_int(5), x));
  CHECK(monomials_of_degree(20, 3).size() == 1540);
}

TEST_CASE("univariate gcd") {
  const Field& f = Field::prime(101);
  UniPoly t(f, {f.zero(), f.one()});
  auto lin = [&](long r) { return t - UniPoly(f, {f.from_int(r)}); };
  UniPoly a = lin(1) * lin(2) * lin(3), b = lin(2) * lin(3) * lin(4);
  CHECK(UniPoly::gcd(a, b) == lin(2) * lin(3));
  auto roots = a.roots_by_scan();
  CHECK(roots.size() == 3);
  Matrix<UniPoly> m(2, 2, UniPoly(f));
  m(0, 0) = lin(1);
  m(1, 1) = lin(2);
  m(0, 1) = UniPoly(f, {f.one()});
  m(1, 0) = UniPoly(f, {f.one()});
  CHECK(det(m) == lin(1) * lin(2) - UniPoly(f, {f.one()}));
}

TEST_CASE("exterior algebra") {
  const Field& f = Field::rationals();
  auto e = [&](int i) { return ExteriorElement::basis(f, Mask(1u << i)); };
  CHECK(wedge(e(E1), e(E1)).is_zero());
  // (e2^e3)^e1 = e1^e2^e3
  CHECK(wedge(wedge(e(E2), e(E3)), e(E1)) == ExteriorElement::basis(f, 0b000111));
  CHECK(grade_dim(3) == 20);
  CHECK(grade_basis(3).front() == 0b000111);

  // iota_{e1*}(e1^e2) = e2
  std::vector<Scalar> e1star(6, f.zero());
  e1star[0] = f.one();
  CHECK(contract(e1star, wedge(e(E1), e(E2))) == e(E2));
  CHECK_THROWS_AS(contract(e1star, ExteriorElement::scalar(f.one())), InvalidInput);
  CHECK_THROWS_AS(wedge(ExteriorElement::basis(f, 0b111), ExteriorElement::basis(f, 0b1111)), InvalidInput);

  FMatrix gram = orientation_gram(f);
  CHECK(rank(gram) == 20);
  CHECK(gram.transpose() == zeros(f, 20, 20) - gram);

  std::mt19937_64 rng(7);
  auto rand_el = [&](int p) {
    std::vector<Scalar> c;
    for (std::size_t i = 0; i < grade_dim(p); ++i) c.push_back(random_scalar(f, rng, 3));
    return ExteriorElement(p, c);
  };
  for (int k = 0; k < 100; ++k) {
    const int p = 1 + rng() % 3, q = 1 + rng() % 3;
    ExteriorElement x = rand_el(p), y = rand_el(q);
    std::vector<Scalar> lam;
    for (int i = 0; i < 6; ++i) lam.push_back(random_scalar(f, rng, 3));
    // graded commutativity
    CHECK(wedge(x, y) == wedge(y, x) * f.from_int((p * q) % 2 ? -1 : 1));
    // graded Leibniz rule
    CHECK(contract(lam, wedge(x, y)) ==
          wedge(contract(lam, x), y) + wedge(x, contract(lam, y)) * f.from_int(p % 2 ? -1 : 1));
    if (p >= 2) CHECK(contract(lam, contract(lam, x)).is_zero());
    ExteriorElement x3 = rand_el(3);
    CHECK(orientation_pair(x3, x3).is_zero());
  }
  // ker iota_lambda on grade 3 is Lambda^3(ker lambda), dimension 10.
  for (int k = 0; k < 20; ++k) {
    std::vector<Scalar> lam;
    for (int i = 0; i < 6; ++i) lam.push_back(random_scalar(f, rng));
    bool nonzero = false;
    for (auto& s : lam) nonzero = nonzero || !s.is_zero();
    if (!nonzero) continue;
    CHECK(kernel_basis(contraction_matrix(lam, 3)).cols() == 10);
  }
  // Induced action is multiplicative.
  for (int k = 0; k < 10; ++k) {
    FMatrix g = random_matrix(f, 6, 6, rng, 2), h = random_matrix(f, 6, 6, rng, 2);
    CHECK(induced_action(g * h, 3) == induced_action(g, 3) * induced_action(h, 3));
  }
}
