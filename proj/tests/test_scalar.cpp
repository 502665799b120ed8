#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qpforge/scalar.hpp"

using namespace qpforge;

TEST_CASE("cyc3 multiplication reduces z^2 = -1 - z") {
  Cyc3 z = Cyc3::zeta();
  Cyc3 z2 = z * z;
  CHECK(z2 == Cyc3(rat(-1), rat(-1)));
  CHECK(z * z2 == Cyc3::one());

  Cyc3 one_plus_z(rat(1), rat(1));
  CHECK(one_plus_z * one_plus_z == z);

  Cyc3 x(rat(2), rat(1));
  Cyc3 y(rat(1, 3), rat(-1, 3));  // (1 - z)/3
  CHECK(x * y == Cyc3::one());
}

TEST_CASE("cyc3 inverse via conjugate over norm") {
  CHECK(cyc3_inv(Cyc3::one()) == Cyc3::one());
  CHECK(cyc3_inv(Cyc3::zeta()) == zeta_pow(2));
  CHECK(cyc3_inv(Cyc3(rat(2), rat(1))) == Cyc3(rat(1, 3), rat(-1, 3)));
  CHECK_THROWS_AS(cyc3_inv(Cyc3::zero()), DivisionByZero);
}

TEST_CASE("zeta powers") {
  CHECK(zeta_pow(0) == Cyc3::one());
  CHECK(zeta_pow(3) == Cyc3::one());
  CHECK(zeta_pow(2) == Cyc3(rat(-1), rat(-1)));
  CHECK(zeta_pow(-1) == zeta_pow(2));
  CHECK(Cyc3::one() + zeta_pow(1) + zeta_pow(2) == Cyc3::zero());
}

TEST_CASE("field properties on random elements") {
  std::mt19937 rng(20240531);
  std::uniform_int_distribution<long> num(-12, 12);
  std::uniform_int_distribution<long> den(1, 9);
  auto rnd = [&] { return Cyc3(rat(num(rng), den(rng)), rat(num(rng), den(rng))); };

  for (int i = 0; i < 300; ++i) {
    Cyc3 x = rnd(), y = rnd(), z = rnd();
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x * y == y * x);
    if (!x.is_zero()) {
      CHECK(x * cyc3_inv(x) == Cyc3::one());
      CHECK((x.norm() == 0) == x.is_zero());
    }
  }
}

TEST_CASE("rational parsing stays canonical") {
  CHECK(rat_parse("2/4") == rat(1, 2));
  CHECK(rat_str(rat_parse("-6/4")) == "-3/2");
  CHECK(rat_str(rat(5)) == "5");
  CHECK_THROWS_AS(rat_parse("1/0"), DivisionByZero);
  CHECK_THROWS_AS(rat_parse("0.5"), InvalidParameter);
}
