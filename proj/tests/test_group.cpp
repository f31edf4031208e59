#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "erg/error.hpp"
#include "erg/group.hpp"
#include "oracles.hpp"

using erg::PolynomialExpr;
using erg::Relation;
using erg::RelationshipGraph;
using Kind = erg::PolynomialExpr::Kind;

namespace {

PolynomialExpr var(const char* s) { return PolynomialExpr::variable(s); }

RelationshipGraph triad_graph() {
  return RelationshipGraph({"a", "b", "c"}, {{"a", "b", Relation::Conflict},
                                             {"a", "c", Relation::Alliance},
                                             {"b", "c", Relation::Alliance}});
}

RelationshipGraph director_graph() {
  return RelationshipGraph({"a", "b", "c", "d"}, {{"a", "b", Relation::Alliance},
                                                  {"a", "c", Relation::Alliance},
                                                  {"b", "c", Relation::Alliance},
                                                  {"a", "d", Relation::Conflict},
                                                  {"b", "d", Relation::Conflict},
                                                  {"c", "d", Relation::Conflict}});
}

}  // namespace

TEST_CASE("subject ids") {
  CHECK(erg::Subject::is_valid_id("a"));
  CHECK(erg::Subject::is_valid_id("dir_1"));
  CHECK_FALSE(erg::Subject::is_valid_id("1a"));
  CHECK_FALSE(erg::Subject::is_valid_id(""));
  CHECK_FALSE(erg::Subject::is_valid_id("a-b"));
  CHECK_THROWS_AS(erg::Subject("_x"), erg::Error);
}

TEST_CASE("parse_polynomial") {
  const auto triad = erg::parse_polynomial("(a+b)c");
  CHECK(triad == PolynomialExpr::product({PolynomialExpr::sum({var("a"), var("b")}), var("c")}));
  CHECK(triad.to_string() == "(a+b)c");

  const auto director = erg::parse_polynomial("abc+d");
  CHECK(director.kind() == Kind::Sum);
  CHECK(director ==
        PolynomialExpr::sum({PolynomialExpr::product({var("a"), var("b"), var("c")}), var("d")}));
  CHECK(director.to_string() == "abc+d");

  const auto single = erg::parse_polynomial("a");
  CHECK(single.is_variable());
  CHECK(single.subject() == erg::Subject("a"));

  SUBCASE("canonical ordering and flattening") {
    CHECK(erg::parse_polynomial("d + c*b*a") == director);
    CHECK(erg::parse_polynomial("c(b+a)") == triad);
    CHECK(erg::parse_polynomial("((a)(b))c + d") == director);
    CHECK(erg::parse_polynomial("a + (b + c)").children().size() == 3);
    CHECK(erg::parse_polynomial(" a b ( c + d ) ").to_string() == "ab(c+d)");
  }
  SUBCASE("indexed single-letter ids") {
    const auto p = erg::parse_polynomial("a1b2+c_3");
    CHECK(p.subjects() == std::vector<erg::Subject>{"a1", "b2", "c_3"});
  }
  SUBCASE("known subject names") {
    const std::vector<erg::Subject> known{"boss", "ann", "bob", "b"};
    const auto p = erg::parse_polynomial("ann*bob + boss", known);
    CHECK(p.subjects() == std::vector<erg::Subject>{"ann", "bob", "boss"});
    CHECK(p.to_string() == "ann*bob+boss");
    CHECK(erg::parse_polynomial(p.to_string(), known) == p);
    CHECK_THROWS_AS(erg::parse_polynomial("ann + carl", known), erg::ParseError);
  }
  SUBCASE("errors carry positions") {
    CHECK_THROWS_AS(erg::parse_polynomial(""), erg::ParseError);
    CHECK_THROWS_AS(erg::parse_polynomial("   "), erg::ParseError);
    CHECK_THROWS_AS(erg::parse_polynomial("a+"), erg::ParseError);
    CHECK_THROWS_AS(erg::parse_polynomial("(a+b"), erg::ParseError);
    CHECK_THROWS_AS(erg::parse_polynomial("a+b)"), erg::ParseError);
    CHECK_THROWS_AS(erg::parse_polynomial("a-b"), erg::ParseError);
    try {
      erg::parse_polynomial("ab+ca");
      FAIL("duplicate accepted");
    } catch (const erg::ParseError& e) {
      CHECK(e.position() == 4);
    }
  }
}

TEST_CASE("polynomial constructors validate") {
  CHECK_THROWS_AS(PolynomialExpr::sum({var("a")}), erg::Error);
  CHECK_THROWS_AS(PolynomialExpr::product({var("a"), var("a")}), erg::Error);
  CHECK_THROWS_AS(var("a").children().at(0), std::out_of_range);
}

TEST_CASE("relationship graph validation") {
  CHECK_NOTHROW(triad_graph());
  try {
    RelationshipGraph({"a", "b", "c"},
                      {{"a", "b", Relation::Conflict}, {"a", "c", Relation::Alliance}});
    FAIL("incomplete graph accepted");
  } catch (const erg::IncompleteGraph& e) {
    CHECK(std::string(e.what()) == "incomplete graph: pair b,c unlabeled");
  }
  CHECK_THROWS_AS(RelationshipGraph({"a", "a"}, {}), erg::Error);
  CHECK_THROWS_AS(RelationshipGraph({"a"}, {{"a", "a", Relation::Alliance}}), erg::Error);
  CHECK_THROWS_AS(RelationshipGraph({"a", "b"}, {{"a", "z", Relation::Alliance}}), erg::Error);
  CHECK_THROWS_AS(RelationshipGraph({"a", "b"}, {{"a", "b", Relation::Alliance},
                                                 {"b", "a", Relation::Conflict}}),
                  erg::Error);
  // Repeating a pair with the same label is harmless.
  CHECK_NOTHROW(RelationshipGraph({"a", "b"}, {{"a", "b", Relation::Alliance},
                                               {"b", "a", Relation::Alliance}}));
  CHECK(RelationshipGraph({"a"}, {}).size() == 1);
}

TEST_CASE("graph_to_polynomial") {
  CHECK(erg::graph_to_polynomial(triad_graph()).to_string() == "(a+b)c");
  CHECK(erg::graph_to_polynomial(director_graph()).to_string() == "abc+d");
  CHECK(erg::graph_to_polynomial(RelationshipGraph({"a"}, {})) == var("a"));

  const RelationshipGraph k4({"a", "b", "c", "d"}, {{"a", "b", Relation::Conflict},
                                                    {"b", "c", Relation::Conflict},
                                                    {"c", "d", Relation::Conflict},
                                                    {"a", "c", Relation::Alliance},
                                                    {"a", "d", Relation::Alliance},
                                                    {"b", "d", Relation::Alliance}});
  CHECK_THROWS_AS(erg::graph_to_polynomial(k4), erg::NotDecomposable);

  // Same labels as k4, checked by exhaustive partition search.
  erg::oracle::LabelMatrix m{4, std::vector<bool>(16, false)};
  for (auto [i, j] : {std::pair{0, 2}, {0, 3}, {1, 3}}) m.alliance[i * 4 + j] = m.alliance[j * 4 + i] = true;
  CHECK(erg::oracle::to_graph(m) == k4);
  CHECK_FALSE(erg::oracle::PartitionOracle(m).decomposable());
}

TEST_CASE("polynomial_to_graph") {
  CHECK(erg::polynomial_to_graph(erg::parse_polynomial("(a+b)c")) == triad_graph());
  CHECK(erg::polynomial_to_graph(erg::parse_polynomial("abc+d")) == director_graph());
  const auto single = erg::polynomial_to_graph(var("a"));
  CHECK(single.size() == 1);
  CHECK(single.edges().empty());
}

TEST_CASE("stratify") {
  const auto t = erg::stratify(erg::parse_polynomial("(a+b)c"));
  CHECK(t.stratum.to_string() == "(a+b)c");
  REQUIRE(t.children.size() == 2);
  CHECK(t.children[0].stratum.to_string() == "a+b");
  CHECK(t.children[1].stratum.to_string() == "c");
  REQUIRE(t.children[0].children.size() == 2);
  CHECK(t.children[0].children[0].stratum.to_string() == "a");
  CHECK(t.children[0].children[1].stratum.to_string() == "b");
  CHECK(t.children[1].children.empty());

  const auto d = erg::stratify(erg::parse_polynomial("abc+d"));
  REQUIRE(d.children.size() == 2);
  CHECK(d.children[0].stratum.to_string() == "abc");
  CHECK(d.children[1].stratum.to_string() == "d");
  REQUIRE(d.children[0].children.size() == 3);
  CHECK(d.children[0].children[2].stratum.to_string() == "c");

  const auto leaf = erg::stratify(var("a"));
  CHECK(leaf.children.empty());
}

TEST_CASE("round trip on every complete graph with up to four subjects") {
  for (int n = 1; n <= 4; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
      const auto m = erg::oracle::matrix_from_mask(n, mask);
      const auto g = erg::oracle::to_graph(m);
      const bool expected = erg::oracle::PartitionOracle(m).decomposable();
      CAPTURE(n);
      CAPTURE(mask);
      if (expected) {
        CHECK(erg::polynomial_to_graph(erg::graph_to_polynomial(g)) == g);
      } else {
        CHECK_THROWS_AS(erg::graph_to_polynomial(g), erg::NotDecomposable);
      }
    }
  }
}

TEST_CASE("decomposability matches the partition oracle and the P4 criterion") {
  for (int n = 1; n <= 6; ++n) {
    const int pairs = n * (n - 1) / 2;
    int decomposable = 0;
    for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
      const auto m = erg::oracle::matrix_from_mask(n, mask);
      const bool expected = erg::oracle::PartitionOracle(m).decomposable();
      bool ok = true;
      try {
        erg::graph_to_polynomial(erg::oracle::to_graph(m));
      } catch (const erg::NotDecomposable&) {
        ok = false;
      }
      if (ok != expected || expected == erg::oracle::has_induced_p4(m)) {
        FAIL("n=" << n << " mask=" << mask);
      }
      decomposable += ok;
    }
    // Labelled cographs: 1, 2, 8, 52, 472, 5504 (OEIS A000311 times 2 for n >= 2).
    const int labelled[] = {0, 1, 2, 8, 52, 472, 5504};
    CHECK(decomposable == labelled[n]);
  }
}

TEST_CASE("random round trips up to seven subjects") {
  std::mt19937 rng(20241014);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 7)(rng);
    const auto p = erg::oracle::random_polynomial(n, rng);
    const auto g = erg::polynomial_to_graph(p);
    CAPTURE(p.to_string());
    CHECK(erg::graph_to_polynomial(g) == p);
    CHECK(erg::polynomial_to_graph(erg::graph_to_polynomial(g)) == g);
    CHECK(erg::parse_polynomial(p.to_string()) == p);

    // Subject order in the graph must not matter.
    auto subjects = g.subjects();
    std::shuffle(subjects.begin(), subjects.end(), rng);
    const RelationshipGraph shuffled(subjects, g.edges());
    CHECK(shuffled == g);
    CHECK(erg::graph_to_polynomial(shuffled) == p);
  }
}
