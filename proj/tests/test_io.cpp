#include "doctest.h"
#include "grlie/builtins.hpp"
#include "grlie/io.hpp"
#include "support.hpp"

using namespace grlie;
using grlie::testing::entry;

TEST_CASE("serialize then parse is the identity on the corpus") {
  for (const auto& name : builtin_names()) {
    const GradedSuperalgebra alg = builtin(name);
    const std::string doc = serialize_algebra(alg);
    const GradedSuperalgebra back = parse_algebra(doc);
    INFO(name);
    CHECK(back == alg);
    CHECK(serialize_algebra(back) == doc);
  }
}

TEST_CASE("scalars serialize in lowest terms") {
  const GradedSuperalgebra alg = GradedSuperalgebra::build(
      GroupSpec{1, {}},
      {{"x", {1}, Parity::even}, {"h", {0}, Parity::even},
       {"y", {-1}, Parity::even}},
      {{0, 2, {{1, make_rational(-3, 6)}}}});
  const std::string doc = serialize_algebra(alg);
  CHECK(doc.find("-1/2") != std::string::npos);
  CHECK(parse_algebra(doc) == alg);
}

TEST_CASE("empty algebras round-trip") {
  const GradedSuperalgebra empty =
      GradedSuperalgebra::build(GroupSpec{2, {}}, {}, {});
  CHECK(parse_algebra(serialize_algebra(empty)) == empty);
}

TEST_CASE("parse rejects malformed documents with context") {
  const std::string base = R"({
    "group": {"free_rank": 1, "torsion": []},
    "basis": [
      {"name": "x", "degree": [1], "parity": 0},
      {"name": "y", "degree": [-1], "parity": 0}
    ],
    "brackets": [])" "\n}";
  CHECK(parse_algebra(base).dim() == 2);

  SUBCASE("zero denominator") {
    const std::string doc = R"({
      "group": {"free_rank": 1, "torsion": []},
      "basis": [{"name": "x", "degree": [1], "parity": 0},
                {"name": "y", "degree": [-1], "parity": 0}],
      "brackets": [{"left": 0, "right": 1, "result": [[0, "1/0"]]}]
    })";
    CHECK_THROWS_AS(parse_algebra(doc), ParseError);
  }
  SUBCASE("unknown basis index") {
    const std::string doc = R"({
      "group": {"free_rank": 1, "torsion": []},
      "basis": [{"name": "x", "degree": [1], "parity": 0}],
      "brackets": [{"left": 0, "right": 7, "result": []}]
    })";
    CHECK_THROWS_AS(parse_algebra(doc), ParseError);
  }
  SUBCASE("degree length mismatch") {
    const std::string doc = R"({
      "group": {"free_rank": 2, "torsion": []},
      "basis": [{"name": "x", "degree": [1], "parity": 0}],
      "brackets": []
    })";
    CHECK_THROWS_AS(parse_algebra(doc), ParseError);
  }
  SUBCASE("bad parity") {
    const std::string doc = R"({
      "group": {"free_rank": 1, "torsion": []},
      "basis": [{"name": "x", "degree": [1], "parity": 2}],
      "brackets": []
    })";
    CHECK_THROWS_AS(parse_algebra(doc), ParseError);
  }
  SUBCASE("not json at all") {
    CHECK_THROWS_AS(parse_algebra("basis := sl2"), ParseError);
  }
  SUBCASE("missing fields") {
    CHECK_THROWS_AS(parse_algebra("{\"group\": {}}"), ParseError);
  }
}

TEST_CASE("duplicate pairs: consistent merges, inconsistent rejects") {
  const std::string consistent = R"({
    "group": {"free_rank": 1, "torsion": []},
    "basis": [{"name": "x", "degree": [1], "parity": 0},
              {"name": "h", "degree": [0], "parity": 0},
              {"name": "y", "degree": [-1], "parity": 0}],
    "brackets": [
      {"left": 0, "right": 2, "result": [[1, "1"]]},
      {"left": 0, "right": 2, "result": [[1, "1"]]}
    ]
  })";
  CHECK(parse_algebra(consistent).table().size() == 1);

  const std::string inconsistent = R"({
    "group": {"free_rank": 1, "torsion": []},
    "basis": [{"name": "x", "degree": [1], "parity": 0},
              {"name": "h", "degree": [0], "parity": 0},
              {"name": "y", "degree": [-1], "parity": 0}],
    "brackets": [
      {"left": 0, "right": 2, "result": [[1, "1"]]},
      {"left": 0, "right": 2, "result": [[1, "2"]]}
    ]
  })";
  CHECK_THROWS_AS(parse_algebra(inconsistent), ParseError);
}

TEST_CASE("mirrored supplies in documents defer to the validator") {
  // [x,y] = h and [y,x] = -h are consistent under skew-supersymmetry.
  const std::string doc = R"({
    "group": {"free_rank": 1, "torsion": []},
    "basis": [{"name": "x", "degree": [1], "parity": 0},
              {"name": "h", "degree": [0], "parity": 0},
              {"name": "y", "degree": [-1], "parity": 0}],
    "brackets": [
      {"left": 0, "right": 2, "result": [[1, "1"]]},
      {"left": 2, "right": 0, "result": [[1, "-1"]]}
    ]
  })";
  CHECK(parse_algebra(doc).validate().ok());
}

TEST_CASE("integer scalars are accepted on input") {
  const std::string doc = R"({
    "group": {"free_rank": 1, "torsion": []},
    "basis": [{"name": "x", "degree": [1], "parity": 0},
              {"name": "h", "degree": [0], "parity": 0},
              {"name": "y", "degree": [-1], "parity": 0}],
    "brackets": [{"left": 0, "right": 2, "result": [[1, 1]]}]
  })";
  const GradedSuperalgebra alg = parse_algebra(doc);
  CHECK(alg.table().at({0, 2}).front().coeff == 1);
}

TEST_CASE("rendered connection classes agree with the oracle partition") {
  for (const auto& name : builtin_names()) {
    const ValidatedAlgebra alg{builtin(name)};
    const SupportGraph sg = SupportGraph::from_algebra(alg);
    // render_connections cross-checks the oracle internally and throws on
    // any disagreement.
    CHECK_NOTHROW(render_connections(connection_classes(sg), sg,
                                     complete_oracle_depth(sg),
                                     OutputFormat::structured));
  }
}

TEST_CASE("renderers are deterministic") {
  const ValidatedAlgebra alg{osp12()};
  const SupportDecomposition dec = support_decomposition(alg);
  CHECK(render_support_decomposition(alg, dec, OutputFormat::text) ==
        render_support_decomposition(alg, dec, OutputFormat::text));
  CHECK(render_support(support(alg), OutputFormat::structured) ==
        render_support(support(alg), OutputFormat::structured));
  CHECK(render_hypotheses(hypothesis_report(alg), OutputFormat::text) ==
        render_hypotheses(hypothesis_report(alg), OutputFormat::text));
}

TEST_CASE("the full report renders every section once") {
  const FullReport ok =
      render_full_report(ValidatedAlgebra{osp12()}, 0, OutputFormat::text);
  CHECK_FALSE(ok.hypotheses_unmet);
  for (const char* title : {"validation", "support", "connections", "ideals",
                            "hypotheses", "decomposition"}) {
    CHECK(ok.rendered.find(std::string("== ") + title + " ==") !=
          std::string::npos);
  }
  const FullReport unmet = render_full_report(ValidatedAlgebra{sl2center()}, 0,
                                              OutputFormat::structured);
  CHECK(unmet.hypotheses_unmet);
}

TEST_CASE("document metadata is optional and survives round trips") {
  const std::string doc = R"({
    "name": "toy",
    "description": "a line",
    "group": {"free_rank": 1, "torsion": []},
    "basis": [{"name": "x", "degree": [0], "parity": 0}],
    "brackets": []
  })";
  const GradedSuperalgebra alg = parse_algebra(doc);
  CHECK(alg.name == "toy");
  CHECK(alg.description == "a line");
  const std::string out = serialize_algebra(alg);
  CHECK(parse_algebra(out) == alg);
  CHECK(out.find("toy") != std::string::npos);

  CHECK(builtin("sl2").name == "sl2");
}
