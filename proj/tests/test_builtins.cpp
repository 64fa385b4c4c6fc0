#include "doctest.h"
#include "grlie/builtins.hpp"
#include "support.hpp"

using namespace grlie;

TEST_CASE("every builtin passes validation") {
  for (const auto& name : builtin_names()) {
    const ValidationReport report = builtin(name).validate();
    INFO(name);
    CHECK(report.ok());
  }
}

TEST_CASE("builtin dimensions") {
  CHECK(builtin("sl2").dim() == 3);
  CHECK(builtin("osp12").dim() == 5);
  CHECK(builtin("sl2xsl2").dim() == 6);
  CHECK(builtin("sl2center").dim() == 4);
  CHECK(builtin("sl3").dim() == 8);
  CHECK(builtin("osp12xsl2").dim() == 8);
  CHECK(builtin("mixed3").dim() == 3);
  CHECK(builtin("mixed4").dim() == 4);
  CHECK_THROWS_AS(builtin("nosuch"), std::invalid_argument);
}

TEST_CASE("homomorphisms respect torsion orders") {
  const GroupSpec c2{0, {2}};
  const GroupSpec z{1, {}};
  const GroupSpec c6{0, {6}};
  CHECK_THROWS_AS(make_hom(c2, z, {{1}}), std::invalid_argument);
  CHECK_NOTHROW(make_hom(c2, z, {{0}}));
  CHECK_NOTHROW(make_hom(c2, c6, {{3}}));
  CHECK_THROWS_AS(make_hom(c2, c6, {{2}}), std::invalid_argument);

  const GroupHom fold = make_hom(z, c6, {{1}});
  CHECK(apply_hom(fold, {7}) == GroupElement{1});
  CHECK(apply_hom(fold, {-1}) == GroupElement{5});
}

TEST_CASE("pushforward keeps the table and maps degrees") {
  const GroupHom axis = make_hom({1, {}}, {2, {}}, {{0, 1}});
  const GradedSuperalgebra moved = pushforward(sl2(), axis);
  CHECK(moved.validate().ok());
  CHECK(moved.basis()[0].degree == GroupElement{0, 1});
  CHECK(moved.table() == sl2().table());
  CHECK_THROWS_AS(pushforward(sl3(), axis), std::invalid_argument);
}

TEST_CASE("pushforward along any homomorphism preserves validity") {
  std::mt19937 rng(41);
  const std::vector<GroupSpec> targets = {
      {1, {}}, {2, {}}, {1, {2}}, {0, {6}}, {0, {2, 2}}};
  for (const auto& name : builtin_names()) {
    const GradedSuperalgebra alg = builtin(name);
    for (int trial = 0; trial < 4; ++trial) {
      const GroupSpec& target = targets[rng() % targets.size()];
      const GroupHom hom = grlie::testing::random_hom(alg.group(), target, rng);
      INFO(name);
      CHECK(pushforward(alg, hom).validate().ok());
    }
  }
}

TEST_CASE("direct sums need a common group and produce unique names") {
  CHECK_THROWS_AS(direct_sum(sl2(), sl3()), std::invalid_argument);
  const GradedSuperalgebra twice = direct_sum(sl2(), sl2(), "", "");
  std::set<std::string> names;
  for (const auto& b : twice.basis()) names.insert(b.name);
  CHECK(names.size() == twice.dim());
  CHECK(twice.validate().ok());
}

TEST_CASE("direct sum summands do not interact") {
  const GradedSuperalgebra alg = sl2xsl2();
  const std::size_t n = alg.dim();
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 3; j < n; ++j) {
      CHECK(alg.bracket_basis(i, j).empty());
    }
  }
}
