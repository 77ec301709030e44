#include <random>

#include "doctest.h"
#include "galecubic/lagrangian.hpp"
#include "helpers.hpp"

using namespace galecubic;
using namespace testutil;

TEST_CASE("coordinate frame") {
  for (const Field* f : {&Field::rationals(), &Field::prime(101)}) {
    const CoordinateFrame fr = build_frame(*f);
    // u_1 applied to ehat_1 ^ f_1.
    ExteriorElement x = wedge(e_hat(*f, 0), ExteriorElement::basis(*f, Mask(1u << F1)));
    CHECK(fr.u_coords(x.coeffs())[0] == f->one());
    CHECK(rank(fr.evaluation()) == 20);
    const ExteriorElement top = orientation_EF(*f);
    CHECK(top == -ExteriorElement::basis(*f, 0b111111));
    // u_r ^ uhat_s = delta_rs (L_E ^ L_F); u's pair trivially among themselves.
    for (std::size_t r = 0; r < 10; ++r)
      for (std::size_t s = 0; s < 10; ++s) {
        ExteriorElement w = wedge(fr.u[r], fr.uhat[s]);
        CHECK(w == (r == s ? top : ExteriorElement(*f, 6)));
        CHECK(wedge(fr.u[r], fr.u[s]).is_zero());
        CHECK(wedge(fr.uhat[r], fr.uhat[s]).is_zero());
      }
    CHECK(lambda3_names().front() == "p123");
    CHECK(lambda3_names().back() == "p456");
  }
}

TEST_CASE("rho-Lagrangian validation") {
  const Field& q = Field::rationals();
  LagrangianCheck ue = check_lagrangian(U_E(q));
  CHECK(ue.dimension_ok);
  CHECK(ue.lagrangian_ok);
  CHECK(!ue.rho_ok);
  CHECK(ue.dim_E == 10);
  CHECK_THROWS_AS(validate(U_E(q)), InvalidInput);

  std::mt19937_64 rng(21);
  FMatrix random_space = random_matrix(q, 20, 10, rng, 3);
  LagrangianCheck rc = check_lagrangian(random_space);
  CHECK(!rc.lagrangian_ok);
  CHECK(rc.failures.size() >= 1);
  LagrangianCheck small = check_lagrangian(random_matrix(q, 20, 4, rng, 3));
  CHECK(!small.dimension_ok);
}

TEST_CASE("Lagrangians from Gale pairs") {
  std::mt19937_64 rng(22);
  for (const Field* f : {&Field::rationals(), &Field::prime(101), &Field::cyclotomic3(Field::rationals())}) {
    for (int k = 0; k < 6; ++k) {
      NonSyzygeticEquation eq = random_equation(*f, rng, k % 2 ? -1 : 1);
      for (std::size_t i = 0; i < 3; ++i) {
        auto [data, qp] = lagrangian_from_gale(eq, i);
        CHECK(data.A.cols() == 10);
        CHECK(data.A_E.cols() == 4);
        CHECK(data.A_F.cols() == 4);
        CHECK(is_zero(qp.Qhat.transpose() * qp.Phat));
        CHECK(is_zero(qp.alpha));
        FMatrix expected = zeros(*f, 10, 10);
        expected(8, 9) = expected(9, 8) = -f->one();
        CHECK(qp.sigma == expected);
        // The same subspace from the Gale dual.
        auto [dual_data, dual_qp] = lagrangian_from_gale(gale_dual(eq), i);
        CHECK(same_column_space(data.A, dual_data.A));

        GalePair back = gale_from_lagrangian(data);
        CHECK(back.presentation.sigma == expected);
        CHECK(is_zero(back.presentation.alpha));
        const NonSyzygeticEquation& plus = eq.sign > 0 ? eq : gale_dual(eq);
        CHECK(equivalent_equations(back.plus, plus).equivalent);
        CHECK(is_gale_pair(back.plus, back.minus));
        CHECK(same_column_space(back.presentation.basis, data.A));
      }
    }
  }
}

TEST_CASE("different choices of L give different Lagrangians") {
  const Field& f = Field::prime(101);
  std::mt19937_64 rng(23);
  NonSyzygeticEquation eq = random_equation(f, rng);
  auto a0 = lagrangian_from_gale(eq, 0).first, a1 = lagrangian_from_gale(eq, 1).first;
  CHECK(!same_column_space(a0.A, a1.A));
  CHECK_THROWS_AS(lagrangian_from_gale(eq, 3), InvalidInput);
}
