#include <stdexcept>
#include <random>

#include "doctest.h"
#include "grlie/group.hpp"

using namespace grlie;

TEST_CASE("multiply adds coordinates and reduces torsion") {
  const GroupSpec z2{2, {}};
  CHECK(multiply(z2, {1, 0}, {0, 1}) == GroupElement{1, 1});
  const GroupSpec c2{0, {2}};
  CHECK(multiply(c2, {1}, {1}) == GroupElement{0});
  const GroupSpec z_c3{1, {3}};
  CHECK(multiply(z_c3, {2, 2}, {-1, 2}) == GroupElement{1, 1});
}

TEST_CASE("inverse negates and reduces") {
  const GroupSpec z{1, {}};
  CHECK(inverse(z, {3}) == GroupElement{-3});
  const GroupSpec c4{0, {4}};
  CHECK(inverse(c4, {1}) == GroupElement{3});
  CHECK(inverse(c4, {0}) == GroupElement{0});
}

TEST_CASE("identity detection reduces first") {
  const GroupSpec z2{2, {}};
  CHECK(is_identity(z2, {0, 0}));
  const GroupSpec c2{0, {2}};
  CHECK_FALSE(is_identity(c2, {1}));
  const GroupSpec c3{0, {3}};
  CHECK(is_identity(c3, {3}));
}

TEST_CASE("group laws hold on random triples") {
  const GroupSpec spec{2, {4, 6}};
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::int64_t> coord(-20, 20);
  auto random_element = [&] {
    GroupElement g(spec.coord_count());
    for (auto& c : g) c = coord(rng);
    return reduce(spec, g);
  };
  for (int i = 0; i < 200; ++i) {
    const GroupElement a = random_element();
    const GroupElement b = random_element();
    const GroupElement c = random_element();
    CHECK(multiply(spec, multiply(spec, a, b), c) ==
          multiply(spec, a, multiply(spec, b, c)));
    CHECK(multiply(spec, a, b) == multiply(spec, b, a));
    CHECK(is_identity(spec, multiply(spec, a, inverse(spec, a))));
    CHECK(inverse(spec, inverse(spec, a)) == a);
  }
}

TEST_CASE("order-2 torsion groups are elementwise self-inverse") {
  const GroupSpec spec{0, {2, 2, 2}};
  for (std::int64_t x = 0; x < 2; ++x) {
    for (std::int64_t y = 0; y < 2; ++y) {
      for (std::int64_t z = 0; z < 2; ++z) {
        const GroupElement g{x, y, z};
        CHECK(inverse(spec, g) == g);
      }
    }
  }
}

TEST_CASE("dimension mismatches are rejected") {
  const GroupSpec z2{2, {}};
  CHECK_THROWS_AS(multiply(z2, {1}, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(inverse(z2, {1}), std::invalid_argument);
  CHECK_THROWS_AS(is_identity(z2, {1, 2, 3}), std::invalid_argument);
}

TEST_CASE("torsion moduli below 2 are rejected") {
  CHECK_THROWS_AS(check_spec(GroupSpec{0, {1}}), std::invalid_argument);
  CHECK_THROWS_AS(check_spec(GroupSpec{1, {0}}), std::invalid_argument);
  CHECK_NOTHROW(check_spec(GroupSpec{3, {2, 5}}));
}
