#include <random>

#include "doctest.h"
#include "galecubic/io.hpp"
#include "helpers.hpp"

using namespace galecubic;
using namespace testutil;

TEST_CASE("scalar encodings") {
  const Field& q = Field::rationals();
  CHECK(scalar_to_json(q.from_rational(mpq_class(-3, 4))) == Json("-3/4"));
  CHECK(scalar_to_json(q.from_int(5)) == Json("5/1"));
  CHECK(scalar_from_json(q, Json("6/8")) == q.from_rational(mpq_class(3, 4)));
  CHECK(scalar_from_json(q, Json(7)) == q.from_int(7));
  CHECK_THROWS_AS(scalar_from_json(q, Json("1/0")), InvalidInput);
  CHECK_THROWS_AS(scalar_from_json(q, Json::array({1, 2})), InvalidInput);

  const Field& p = Field::prime(97);
  CHECK(scalar_to_json(p.from_int(-1)) == Json(96));
  CHECK_THROWS_AS(scalar_from_json(p, Json(97)), InvalidInput);
  CHECK_THROWS_AS(scalar_from_json(p, Json("3/1")), InvalidInput);

  const Field& c = Field::cyclotomic3(q);
  CHECK(scalar_to_json(c.xi()) == Json::array({"0/1", "1/1"}));
  CHECK_THROWS_AS(scalar_from_json(c, Json("1/1")), InvalidInput);

  CHECK(parse_scalar_list(p, "1, -1,35") == std::vector<Scalar>{p.one(), p.from_int(96), p.from_int(35)});
  CHECK(parse_scalar_list(c, "0:1")[0] == c.xi());
  CHECK_THROWS_AS(parse_scalar_list(p, "1:2"), InvalidInput);
}

TEST_CASE("instance files round-trip exactly") {
  std::mt19937_64 rng(71);
  for (const Field* f : field_kinds()) {
    for (int k = 0; k < 5; ++k) {
      InstanceFile inst;
      inst.field = f;
      NonSyzygeticEquation eq = random_equation(*f, rng, k % 2 ? -1 : 1);
      inst.equations = {eq, gale_dual(eq)};
      if (k % 2) inst.lagrangian = random_matrix(*f, 20, 10, rng);
      if (k % 3 == 0) inst.generators = {random_matrix(*f, 6, 6, rng), random_matrix(*f, 6, 6, rng)};
      if (k == 4)
        inst.params = A4FamilyParams{random_scalar(*f, rng), random_scalar(*f, rng), random_scalar(*f, rng),
                                     random_scalar(*f, rng), random_scalar(*f, rng), random_scalar(*f, rng)};
      const Json j = instance_to_json(inst);
      const InstanceFile back = instance_from_json(j);
      CHECK(back == inst);
      // Text round trip is bit-exact as well.
      CHECK(instance_to_json(instance_from_json(Json::parse(j.dump()))).dump() == j.dump());
    }
  }
}

TEST_CASE("polynomials round-trip") {
  std::mt19937_64 rng(72);
  for (const Field* f : field_kinds()) {
    const MultiPoly p = cubic_polynomial(random_equation(*f, rng));
    CHECK(poly_from_json(*f, poly_to_json(p), 6) == p);
  }
}

TEST_CASE("malformed instances are rejected") {
  const Json good = instance_to_json(InstanceFile{&Field::prime(7), {}, {}, {}, {}});
  CHECK_NOTHROW(instance_from_json(good));
  Json bad_field = good;
  bad_field["field"] = "prime:8";
  CHECK_THROWS_AS(instance_from_json(bad_field), InvalidInput);
  Json short_m = good;
  short_m["equations"] = Json::array({Json{{"sign", 1}, {"M", Json::array()}, {"L", Json::array()}}});
  CHECK_THROWS_AS(instance_from_json(short_m), InvalidInput);
  Json wide = good;
  Json row = Json::array({1, 2, 3, 4, 5, 6, 0});
  Json m = Json::array();
  for (int k = 0; k < 9; ++k) m.push_back(row);
  wide["equations"] = Json::array({Json{{"sign", 1}, {"M", m}, {"L", Json::array({row, row, row})}}});
  CHECK_THROWS_AS(instance_from_json(wide), InvalidInput);
  Json lag = good;
  lag["lagrangian"] = Json::array({Json::array({1, 2, 3})});
  CHECK_THROWS_AS(instance_from_json(lag), InvalidInput);
}
