#include <stdexcept>
#include <random>

#include "doctest.h"
#include "grlie/rational.hpp"

using namespace grlie;

TEST_CASE("construction canonicalizes") {
  CHECK(rational_to_string(make_rational(-3, 6)) == "-1/2");
  CHECK(rational_to_string(make_rational(4, 2)) == "2");
  CHECK(rational_to_string(make_rational(3, -6)) == "-1/2");
  CHECK(rational_to_string(make_rational(0, 5)) == "0");
  CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
}

TEST_CASE("string parsing round-trips and normalizes") {
  CHECK(rational_from_string("7") == make_rational(7));
  CHECK(rational_from_string("-7/14") == make_rational(-1, 2));
  CHECK(rational_from_string("4/-6") == make_rational(-2, 3));
  CHECK(rational_to_string(rational_from_string("100/25")) == "4");
  CHECK_THROWS_AS(rational_from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string(""), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string("a/2"), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string("1/"), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string("/2"), std::invalid_argument);
}

TEST_CASE("field arithmetic is exact") {
  const Rational third = make_rational(1, 3);
  Rational sum(0);
  for (int i = 0; i < 3; ++i) sum += third;
  CHECK(sum == 1);
  CHECK(make_rational(1, 7) * make_rational(7, 1) == 1);
  CHECK(is_zero(make_rational(5) - make_rational(10, 2)));
}

TEST_CASE("random rationals stay in lowest terms") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> num(-1000000, 1000000);
  std::uniform_int_distribution<long> den(1, 1000000);
  for (int i = 0; i < 500; ++i) {
    const long p = num(rng);
    const long q = den(rng);
    const Rational r = rational_from_string(std::to_string(p) + "/" + std::to_string(q));
    CHECK(r.get_den() > 0);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    CHECK(g == 1);
    CHECK(rational_from_string(rational_to_string(r)) == r);
  }
}
