#include "erg/pad.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "erg/error.hpp"

namespace erg::pad {
namespace {

constexpr std::array<std::string_view, 8> kNames = {
    "Bored", "Disdainful", "Anxious", "Hostile", "Docile", "Relaxed", "Dependent", "Exuberant"};

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) ==
                  std::tolower(static_cast<unsigned char>(y));
         });
}

void check_component(double v, const char* what) {
  if (!(v >= -1.0 && v <= 1.0)) {
    throw Error(std::string(what) + " component " + std::to_string(v) + " outside [-1, 1]");
  }
}

}  // namespace

// The enumerators are declared in code order, so the code is the ordinal.
Alternative encode(Emotion e) {
  return Alternative::from_code(static_cast<std::uint32_t>(e), 3);
}

Emotion decode(const Alternative& a) {
  if (a.width() != 3) {
    throw Error("only width-3 alternatives name an emotion (got width " +
                std::to_string(a.width()) + ")");
  }
  return static_cast<Emotion>(a.code());
}

std::string_view name(Emotion e) { return kNames.at(static_cast<std::size_t>(e)); }

Emotion from_name(std::string_view text) {
  for (Emotion e : kAllEmotions) {
    if (iequals(name(e), text)) return e;
  }
  throw Error("unknown emotion name '" + std::string(text) + "'");
}

Alternative quantize(const PadTriple& t) {
  check_component(t.pleasure, "pleasure");
  check_component(t.arousal, "arousal");
  check_component(t.dominance, "dominance");
  return Alternative::from_bits({t.pleasure > 0.0, t.arousal > 0.0, t.dominance > 0.0});
}

std::vector<Emotion> basis_decompose(const Alternative& a) {
  const Alternative code = encode(decode(a));
  std::vector<Emotion> out;
  for (Emotion b : kBasis) {
    if (contains(code, encode(b))) out.push_back(b);
  }
  return out;
}

std::string describe(Emotion e) {
  return std::string(name(e)) + " " + encode(e).to_string();
}

}  // namespace erg::pad
