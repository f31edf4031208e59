#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "erg/error.hpp"
#include "erg/pad.hpp"

using erg::Alternative;
using erg::pad::Emotion;

namespace {

Alternative alt(int p, int a, int d) { return Alternative::from_bits({p, a, d}); }

}  // namespace

TEST_CASE("coding list") {
  const std::vector<std::pair<Emotion, Alternative>> table = {
      {Emotion::Docile, alt(1, 0, 0)},     {Emotion::Anxious, alt(0, 1, 0)},
      {Emotion::Disdainful, alt(0, 0, 1)}, {Emotion::Hostile, alt(0, 1, 1)},
      {Emotion::Dependent, alt(1, 1, 0)},  {Emotion::Relaxed, alt(1, 0, 1)},
      {Emotion::Exuberant, alt(1, 1, 1)},  {Emotion::Bored, alt(0, 0, 0)},
  };
  for (const auto& [e, code] : table) {
    CAPTURE(erg::pad::name(e));
    CHECK(erg::pad::encode(e) == code);
    CHECK(erg::pad::decode(code) == e);
  }
}

TEST_CASE("encode/decode are inverse bijections") {
  for (Emotion e : erg::pad::kAllEmotions) CHECK(erg::pad::decode(erg::pad::encode(e)) == e);
  for (const auto& a : erg::all_alternatives()) CHECK(erg::pad::encode(erg::pad::decode(a)) == a);
  CHECK_THROWS_AS(erg::pad::decode(Alternative::top(4)), erg::Error);
}

TEST_CASE("names") {
  CHECK(erg::pad::from_name("relaxed") == Emotion::Relaxed);
  CHECK(erg::pad::from_name("EXUBERANT") == Emotion::Exuberant);
  CHECK(erg::pad::from_name("Docile") == Emotion::Docile);
  CHECK_THROWS_AS(erg::pad::from_name("curious"), erg::Error);
  CHECK(erg::pad::describe(Emotion::Relaxed) == "Relaxed {1,0,1}");
}

TEST_CASE("quantize") {
  CHECK(erg::pad::quantize({-0.51, 0.59, 0.25}) == alt(0, 1, 1));
  CHECK(erg::pad::decode(erg::pad::quantize({-0.51, 0.59, 0.25})) == Emotion::Hostile);
  CHECK(erg::pad::quantize({1, 1, 1}) == alt(1, 1, 1));

  // Componentwise sign test on the "curious" reading.
  const erg::pad::PadTriple curious{0.22, 0.62, -0.01};
  const Alternative expected =
      alt(curious.pleasure > 0, curious.arousal > 0, curious.dominance > 0);
  CHECK(expected == alt(1, 1, 0));
  CHECK(erg::pad::quantize(curious) == expected);

  SUBCASE("zero maps to the negative pole") {
    CHECK(erg::pad::quantize({0, 0, 0}) == alt(0, 0, 0));
    CHECK(erg::pad::quantize({-1, 0, 1}) == alt(0, 0, 1));
  }
  SUBCASE("out of range is rejected") {
    CHECK_THROWS_AS(erg::pad::quantize({1.01, 0, 0}), erg::Error);
    CHECK_THROWS_AS(erg::pad::quantize({0, -2, 0}), erg::Error);
    CHECK_THROWS_AS(erg::pad::quantize({0, 0, std::nan("")}), erg::Error);
  }
}

TEST_CASE("quantize is stable on pole values") {
  for (const auto& a : erg::all_alternatives()) {
    const erg::pad::PadTriple poles{a.atom(0) ? 1.0 : -1.0, a.atom(1) ? 1.0 : -1.0,
                                    a.atom(2) ? 1.0 : -1.0};
    CHECK(erg::pad::quantize(poles) == a);
  }
}

TEST_CASE("basis decomposition") {
  CHECK(erg::pad::basis_decompose(alt(1, 1, 0)) ==
        std::vector<Emotion>{Emotion::Docile, Emotion::Anxious});
  CHECK(erg::pad::basis_decompose(alt(0, 0, 0)).empty());
  CHECK(join(join(alt(1, 0, 0), alt(0, 1, 0)), alt(0, 0, 1)) == alt(1, 1, 1));
  CHECK(erg::pad::basis_decompose(alt(1, 1, 1)) ==
        std::vector<Emotion>{Emotion::Docile, Emotion::Anxious, Emotion::Disdainful});

  for (const auto& a : erg::all_alternatives()) {
    Alternative acc = Alternative::bottom();
    for (Emotion b : erg::pad::basis_decompose(a)) acc = join(acc, erg::pad::encode(b));
    CHECK(acc == a);
  }
}
