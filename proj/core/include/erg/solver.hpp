#pragma once

// Decision equations x = Phi(..., x, ...): canonical form x = Ax + B~x,
// exact solution intervals, and search for controlling influences.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "erg/group.hpp"
#include "erg/symbolic.hpp"

namespace erg {

/// x = upper*x + lower*~x with neither side depending on x.
struct CanonicalForm {
  Subject subject;
  SymbolicAlt upper;  // Phi at x = top (A)
  SymbolicAlt lower;  // Phi at x = bottom (B)
};

/// Either the solution interval [lower, upper] or no solution.
class DecisionResult {
 public:
  static DecisionResult interval(const Alternative& lower, const Alternative& upper);
  static DecisionResult no_solution() { return DecisionResult(); }

  bool has_solution() const noexcept { return bounds_.has_value(); }
  const Alternative& lower() const;
  const Alternative& upper() const;
  bool is_unique() const { return has_solution() && bounds_->first == bounds_->second; }
  /// All solutions ascending by code; empty for no solution.
  std::vector<Alternative> solutions() const;

  friend bool operator==(const DecisionResult&, const DecisionResult&) = default;

 private:
  DecisionResult() = default;
  std::optional<std::pair<Alternative, Alternative>> bounds_;
};

/// Shannon split of `phi` on `subject`. A function not depending on the
/// subject has upper = lower = phi.
CanonicalForm canonicalize(const SymbolicAlt& phi, const Subject& subject);

/// Interval(B*, A*) when A* ⊇ B*, otherwise no solution. Throws
/// MissingInfluence when A or B needs a value that is absent.
DecisionResult solve(const CanonicalForm& cf, const Assignment& influences);

/// Brute-force fixpoints {x : x = phi(..., x, ...)} over all alternatives.
std::vector<Alternative> verify_fixpoints(const SymbolicAlt& phi, const Subject& subject,
                                          const Assignment& influences);

using GroupSolution = std::map<Subject, DecisionResult>;

/// Solves every subject's equation using the others' influences. A subject's
/// own entry in `influences` is ignored for its own equation.
GroupSolution solve_group(const PolynomialExpr& p, const Assignment& influences,
                          int width = kDefaultWidth);
/// Throws NotDecomposable.
GroupSolution solve_group(const RelationshipGraph& g, const Assignment& influences,
                          int width = kDefaultWidth);

/// Values of the controller's influence for which `target` has the unique
/// solution `desired`, ascending. Throws erg::Error if controller == target or
/// either is not in the group.
std::vector<Alternative> control_search(const PolynomialExpr& p, const Subject& controller,
                                        const Subject& target, const Alternative& desired,
                                        const Assignment& influences);
std::vector<Alternative> control_search(const RelationshipGraph& g, const Subject& controller,
                                        const Subject& target, const Alternative& desired,
                                        const Assignment& influences);

/// "a: {1,0,1} Relaxed", "c: interval [{0,0,0}, {1,0,0}] = { Bored, Docile }",
/// "b: NO SOLUTION". Emotion names appear for width 3 only.
std::string describe(const Subject& s, const DecisionResult& r);

}  // namespace erg
