#pragma once

// The eight basic PAD emotional states coded as width-3 alternatives.

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "erg/algebra.hpp"

namespace erg::pad {

enum class Emotion {
  Bored,       // {0,0,0}
  Disdainful,  // {0,0,1}
  Anxious,     // {0,1,0}
  Hostile,     // {0,1,1}
  Docile,      // {1,0,0}
  Relaxed,     // {1,0,1}
  Dependent,   // {1,1,0}
  Exuberant,   // {1,1,1}
};

/// All eight states, ascending by code.
inline constexpr std::array<Emotion, 8> kAllEmotions = {
    Emotion::Bored,   Emotion::Disdainful, Emotion::Anxious,   Emotion::Hostile,
    Emotion::Docile,  Emotion::Relaxed,    Emotion::Dependent, Emotion::Exuberant};

/// Docile, Anxious, Disdainful: every state is a join of a subset of these.
inline constexpr std::array<Emotion, 3> kBasis = {Emotion::Docile, Emotion::Anxious,
                                                  Emotion::Disdainful};

/// A continuous pleasure/arousal/dominance reading, each in [-1, 1].
struct PadTriple {
  double pleasure = 0.0;
  double arousal = 0.0;
  double dominance = 0.0;
};

Alternative encode(Emotion e);
/// Throws erg::Error unless `a` has width 3.
Emotion decode(const Alternative& a);

/// Canonical capitalized name, e.g. "Relaxed".
std::string_view name(Emotion e);
/// Case-insensitive lookup. Throws erg::Error on an unknown name.
Emotion from_name(std::string_view name);

/// Positive component -> positive pole (1); zero and negative -> 0.
/// Throws erg::Error when a component lies outside [-1, 1].
Alternative quantize(const PadTriple& t);

/// Basis states whose join is `a`, in basis order. Empty for Bored.
std::vector<Emotion> basis_decompose(const Alternative& a);

/// "Relaxed {1,0,1}".
std::string describe(Emotion e);

}  // namespace erg::pad
