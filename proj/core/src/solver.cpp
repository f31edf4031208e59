#include "erg/solver.hpp"

#include <algorithm>

#include "erg/error.hpp"
#include "erg/pad.hpp"
#include "erg/reflexion.hpp"

namespace erg {

DecisionResult DecisionResult::interval(const Alternative& lower, const Alternative& upper) {
  if (!contains(upper, lower)) {
    throw Error("interval upper " + upper.to_string() + " does not contain lower " +
                lower.to_string());
  }
  DecisionResult r;
  r.bounds_.emplace(lower, upper);
  return r;
}

const Alternative& DecisionResult::lower() const {
  if (!bounds_) throw Error("decision has no solution");
  return bounds_->first;
}

const Alternative& DecisionResult::upper() const {
  if (!bounds_) throw Error("decision has no solution");
  return bounds_->second;
}

std::vector<Alternative> DecisionResult::solutions() const {
  if (!bounds_) return {};
  return erg::interval(bounds_->first, bounds_->second);
}

CanonicalForm canonicalize(const SymbolicAlt& phi, const Subject& subject) {
  const int w = phi.width();
  return {subject, phi.substitute({{subject, Alternative::top(w)}}),
          phi.substitute({{subject, Alternative::bottom(w)}})};
}

DecisionResult solve(const CanonicalForm& cf, const Assignment& influences) {
  // Per atom: (A,B) = (1,0) admits both bits, A = B forces the bit, and
  // (0,1) admits none. So the fixpoints are exactly [B, A].
  const Alternative upper = cf.upper.evaluate(influences);
  const Alternative lower = cf.lower.evaluate(influences);
  if (!contains(upper, lower)) return DecisionResult::no_solution();
  return DecisionResult::interval(lower, upper);
}

std::vector<Alternative> verify_fixpoints(const SymbolicAlt& phi, const Subject& subject,
                                          const Assignment& influences) {
  std::vector<Alternative> out;
  Assignment env = influences;
  for (const Alternative& x : all_alternatives(phi.width())) {
    env.insert_or_assign(subject, x);
    if (phi.evaluate(env) == x) out.push_back(x);
  }
  return out;
}

namespace {

Assignment without(const Assignment& influences, const Subject& s) {
  Assignment out = influences;
  out.erase(s);
  return out;
}

void require_member(const PolynomialExpr& p, const Subject& s, const char* role) {
  const auto& subjects = p.subjects();
  if (!std::binary_search(subjects.begin(), subjects.end(), s)) {
    throw Error(std::string(role) + " '" + s.id() + "' is not a member of the group");
  }
}

}  // namespace

GroupSolution solve_group(const PolynomialExpr& p, const Assignment& influences, int width) {
  const SymbolicAlt phi = reflexive_function(p, width);
  GroupSolution out;
  for (const auto& s : p.subjects()) {
    out.emplace(s, solve(canonicalize(phi, s), without(influences, s)));
  }
  return out;
}

GroupSolution solve_group(const RelationshipGraph& g, const Assignment& influences, int width) {
  return solve_group(graph_to_polynomial(g), influences, width);
}

std::vector<Alternative> control_search(const PolynomialExpr& p, const Subject& controller,
                                        const Subject& target, const Alternative& desired,
                                        const Assignment& influences) {
  if (controller == target) throw Error("controller and target must differ");
  require_member(p, controller, "controller");
  require_member(p, target, "target");
  const int width = desired.width();
  const CanonicalForm cf = canonicalize(reflexive_function(p, width), target);
  Assignment env = without(influences, target);
  std::vector<Alternative> out;
  for (const Alternative& v : all_alternatives(width)) {
    env.insert_or_assign(controller, v);
    const DecisionResult r = solve(cf, env);
    if (r.is_unique() && r.lower() == desired) out.push_back(v);
  }
  return out;
}

std::vector<Alternative> control_search(const RelationshipGraph& g, const Subject& controller,
                                        const Subject& target, const Alternative& desired,
                                        const Assignment& influences) {
  return control_search(graph_to_polynomial(g), controller, target, desired, influences);
}

std::string describe(const Subject& s, const DecisionResult& r) {
  std::string out = s.id() + ": ";
  if (!r.has_solution()) return out + "NO SOLUTION";
  const bool named = r.lower().width() == 3;
  if (r.is_unique()) {
    out += r.lower().to_string();
    if (named) out += " " + std::string(pad::name(pad::decode(r.lower())));
    return out;
  }
  out += "interval [" + r.lower().to_string() + ", " + r.upper().to_string() + "] = {";
  bool first = true;
  for (const auto& x : r.solutions()) {
    out += first ? " " : ", ";
    first = false;
    out += named ? std::string(pad::name(pad::decode(x))) : x.to_string();
  }
  return out + " }";
}

}  // namespace erg
