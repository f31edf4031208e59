#pragma once

// Line-oriented scenario files:
//
//   subjects: a b c d
//   relation alliance: a-b, a-c, b-c
//   relation conflict: a-d, b-d, c-d
//   polynomial: abc+d            (instead of the relation lines)
//   influence a: Relaxed | {1,0,0} | ?
//   width: 3
//
// '#' starts a comment.

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "erg/error.hpp"
#include "erg/group.hpp"
#include "erg/symbolic.hpp"

namespace erg::cli {

/// Invalid scenario content. `line()` is 1-based, 0 when not tied to a line.
class ScenarioError : public Error {
 public:
  ScenarioError(const std::string& what, std::size_t line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct Scenario {
  std::vector<Subject> subjects;  // declaration order
  std::optional<RelationshipGraph> graph;
  std::optional<PolynomialExpr> polynomial;
  /// nullopt marks a symbolic ("?") influence. Subjects without an entry are
  /// symbolic too.
  std::map<Subject, std::optional<Alternative>> influences;
  int width = kDefaultWidth;

  /// The group polynomial, decomposing the graph when needed. Throws
  /// NotDecomposable.
  PolynomialExpr group() const;
  /// Concrete influences only.
  Assignment concrete_influences() const;
  bool is_symbolic(const Subject& s) const;
};

/// Resolves an emotion name (any case) or brace code of the given width.
Alternative parse_state(std::string_view text, int width);

Scenario parse_scenario(std::string_view text);
/// Throws ScenarioError when the file cannot be read or is invalid.
Scenario load_scenario(const std::filesystem::path& path);

}  // namespace erg::cli
