#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>

#include "erg/algebra.hpp"
#include "erg/error.hpp"

using erg::Alternative;

namespace {

Alternative alt(int p, int a, int d) { return Alternative::from_bits({p, a, d}); }

}  // namespace

TEST_CASE("join") {
  CHECK(join(alt(1, 0, 0), alt(0, 0, 1)) == alt(1, 0, 1));
  CHECK(join(alt(1, 1, 0), alt(0, 1, 1)) == alt(1, 1, 1));
  for (const auto& x : erg::all_alternatives()) CHECK(join(x, Alternative::bottom()) == x);
  CHECK_THROWS_AS(join(alt(1, 0, 0), Alternative::bottom(4)), erg::WidthMismatch);
}

TEST_CASE("meet") {
  CHECK(meet(alt(1, 1, 0), alt(1, 0, 1)) == alt(1, 0, 0));
  CHECK(meet(alt(1, 0, 1), alt(1, 0, 0)) == alt(1, 0, 0));
  for (const auto& x : erg::all_alternatives()) CHECK(meet(x, Alternative::top()) == x);
  CHECK_THROWS_AS(meet(alt(1, 0, 0), Alternative::top(2)), erg::WidthMismatch);
}

TEST_CASE("complement") {
  CHECK(complement(alt(1, 1, 1)) == alt(0, 0, 0));
  CHECK(complement(alt(1, 0, 1)) == alt(0, 1, 0));
  CHECK(complement(alt(0, 0, 0)) == alt(1, 1, 1));
  CHECK(complement(Alternative::from_code(0b0110, 4)) == Alternative::from_code(0b1001, 4));
}

TEST_CASE("contains") {
  CHECK(contains(alt(1, 0, 1), alt(1, 0, 0)));
  CHECK_FALSE(contains(alt(1, 0, 0), alt(0, 1, 0)));
  for (const auto& x : erg::all_alternatives()) CHECK(contains(x, x));
  CHECK_THROWS_AS(contains(alt(1, 0, 0), Alternative::top(5)), erg::WidthMismatch);
}

TEST_CASE("interval") {
  CHECK(erg::interval(alt(0, 0, 0), alt(1, 1, 1)) == erg::all_alternatives());
  CHECK(erg::interval(alt(1, 0, 0), alt(0, 1, 0)).empty());

  // Oracle: filter all eight alternatives by the two containments.
  std::vector<Alternative> expected;
  for (const auto& x : erg::all_alternatives()) {
    if (contains(alt(1, 0, 0), x) && contains(x, alt(0, 0, 0))) expected.push_back(x);
  }
  CHECK(expected == std::vector<Alternative>{alt(0, 0, 0), alt(1, 0, 0)});
  CHECK(erg::interval(alt(0, 0, 0), alt(1, 0, 0)) == expected);
}

TEST_CASE("integer encoding puts the first atom in the high bit") {
  CHECK(alt(1, 0, 0).code() == 4);
  CHECK(alt(0, 0, 1).code() == 1);
  CHECK(alt(1, 0, 1).to_string() == "{1,0,1}");
  CHECK(Alternative::from_code(6).to_string() == "{1,1,0}");
  CHECK(alt(0, 1, 1).atom(0) == false);
  CHECK(alt(0, 1, 1).atom(2) == true);
  CHECK(alt(0, 0, 0).with_atom(1, true) == alt(0, 1, 0));
  CHECK_THROWS_AS(Alternative::from_code(8, 3), erg::Error);
  CHECK_THROWS_AS(Alternative::top(0), erg::Error);
}

TEST_CASE("parse") {
  CHECK(Alternative::parse("{1,0,1}") == alt(1, 0, 1));
  CHECK(Alternative::parse(" { 0 , 1 , 1 } ") == alt(0, 1, 1));
  CHECK(Alternative::parse("{1,0,0,1}") == Alternative::from_code(9, 4));
  CHECK_THROWS_AS(Alternative::parse("1,0,1"), erg::ParseError);
  CHECK_THROWS_AS(Alternative::parse("{1,2,1}"), erg::ParseError);
  CHECK_THROWS_AS(Alternative::parse("{1,0"), erg::ParseError);
  CHECK_THROWS_AS(Alternative::parse("{}"), erg::ParseError);
  CHECK_THROWS_AS(Alternative::parse("{1,0,1}x"), erg::ParseError);
  for (const auto& x : erg::all_alternatives(4)) CHECK(Alternative::parse(x.to_string()) == x);
}

TEST_CASE("default atoms") {
  const auto atoms = erg::default_atoms();
  REQUIRE(atoms.size() == 3);
  CHECK(atoms[0].label == "P");
  CHECK(atoms[1].label == "A");
  CHECK(atoms[2].label == "D");
  CHECK(erg::default_atoms(2)[1].label == "X1");
}

TEST_CASE("Boolean algebra laws hold exhaustively") {
  const auto all = erg::all_alternatives();
  const Alternative top = Alternative::top(), bot = Alternative::bottom();
  for (const auto& x : all) {
    CHECK(~~x == x);
    CHECK((x | ~x) == top);
    CHECK((x & ~x) == bot);
    CHECK((x | x) == x);
    CHECK((x & x) == x);
    for (const auto& y : all) {
      CHECK((x | y) == (y | x));
      CHECK((x & y) == (y & x));
      CHECK((x | (x & y)) == x);
      CHECK((x & (x | y)) == x);
      CHECK(~(x | y) == (~x & ~y));
      CHECK(~(x & y) == (~x | ~y));
      CHECK(contains(x, y) == ((x | y) == x));
      CHECK(contains(x, y) == ((x & y) == y));
      if (contains(x, y) && contains(y, x)) CHECK(x == y);
      for (const auto& z : all) {
        CHECK(((x | y) | z) == (x | (y | z)));
        CHECK(((x & y) & z) == (x & (y & z)));
        CHECK((x & (y | z)) == ((x & y) | (x & z)));
        CHECK((x | (y & z)) == ((x | y) & (x | z)));
        if (contains(x, y) && contains(y, z)) CHECK(contains(x, z));
      }
    }
  }
}

TEST_CASE("operations act atom by atom") {
  const auto all = erg::all_alternatives();
  for (const auto& x : all) {
    for (const auto& y : all) {
      for (int i = 0; i < 3; ++i) {
        CHECK((x | y).atom(i) == (x.atom(i) || y.atom(i)));
        CHECK((x & y).atom(i) == (x.atom(i) && y.atom(i)));
        CHECK((~x).atom(i) == !x.atom(i));
      }
    }
  }
}

TEST_CASE("interval size follows the free-bit count") {
  for (int w : {3, 4}) {
    const auto all = erg::all_alternatives(w);
    for (const auto& lo : all) {
      for (const auto& hi : all) {
        const auto members = erg::interval(lo, hi);
        if (!contains(hi, lo)) {
          CHECK(members.empty());
          continue;
        }
        CHECK(members.size() == (std::size_t{1} << std::popcount(hi.code() & ~lo.code())));
        CHECK(std::is_sorted(members.begin(), members.end()));
        for (const auto& m : members) {
          CHECK(contains(hi, m));
          CHECK(contains(m, lo));
        }
      }
    }
  }
}
