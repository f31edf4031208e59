#pragma once

// Groups of subjects: relationship graphs, the polynomials that encode the
// decomposable ones, and their stratification into sub-polynomials.

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace erg {

/// A subject identifier: a letter followed by letters, digits or underscores.
class Subject {
 public:
  Subject(std::string id);  // NOLINT(google-explicit-constructor)
  Subject(const char* id) : Subject(std::string(id)) {}  // NOLINT

  const std::string& id() const noexcept { return id_; }

  friend bool operator==(const Subject&, const Subject&) = default;
  friend auto operator<=>(const Subject&, const Subject&) = default;

  static bool is_valid_id(std::string_view id);

 private:
  std::string id_;
};

std::ostream& operator<<(std::ostream& os, const Subject& s);

enum class Relation { Alliance, Conflict };

std::string_view to_string(Relation r);

/// Complete graph over subjects with every edge labelled alliance or conflict.
class RelationshipGraph {
 public:
  struct Edge {
    Subject a;
    Subject b;
    Relation relation;
  };

  /// Validates that every unordered pair of distinct subjects carries exactly
  /// one label. Throws IncompleteGraph for a missing pair, erg::Error for
  /// duplicates, self pairs, unknown subjects or contradictory labels.
  RelationshipGraph(std::vector<Subject> subjects, const std::vector<Edge>& edges);

  const std::vector<Subject>& subjects() const noexcept { return subjects_; }
  std::size_t size() const noexcept { return subjects_.size(); }
  Relation relation(const Subject& a, const Subject& b) const;
  Relation relation(std::size_t i, std::size_t j) const { return labels_[i * size() + j]; }
  std::optional<std::size_t> index_of(const Subject& s) const;

  /// Edges (a < b by subject order) in lexicographic order of ids.
  std::vector<Edge> edges() const;

  /// Same subject set and the same label on every pair; subject order is
  /// irrelevant.
  friend bool operator==(const RelationshipGraph& x, const RelationshipGraph& y);

 private:
  std::vector<Subject> subjects_;
  std::vector<Relation> labels_;  // row-major size()*size(), diagonal unused
};

/// Polynomial over subject variables: sum = conflict, product = alliance.
///
/// Always canonical: nested sums (products) are flattened into their parent,
/// each subject occurs once, and children are ordered by the smallest subject
/// they contain.
class PolynomialExpr {
 public:
  enum class Kind { Variable, Sum, Product };

  static PolynomialExpr variable(Subject s);
  /// Throws erg::Error for fewer than two operands or a repeated subject.
  static PolynomialExpr sum(std::vector<PolynomialExpr> operands);
  static PolynomialExpr product(std::vector<PolynomialExpr> operands);

  Kind kind() const noexcept { return kind_; }
  bool is_variable() const noexcept { return kind_ == Kind::Variable; }
  /// The variable's subject. Precondition: is_variable().
  const Subject& subject() const;
  const std::vector<PolynomialExpr>& children() const noexcept { return children_; }

  /// Contained subjects in ascending order.
  const std::vector<Subject>& subjects() const noexcept { return subjects_; }
  const Subject& min_subject() const { return subjects_.front(); }

  /// Juxtaposition for products when every id is a single letter optionally
  /// followed by digits/underscores; '*' otherwise.
  std::string to_string() const;

  friend bool operator==(const PolynomialExpr& x, const PolynomialExpr& y) {
    return x.kind_ == y.kind_ && x.subjects_ == y.subjects_ && x.children_ == y.children_;
  }

 private:
  PolynomialExpr() = default;
  static PolynomialExpr make_nary(Kind kind, std::vector<PolynomialExpr> operands);
  std::string render(bool juxtapose) const;

  Kind kind_ = Kind::Variable;
  std::vector<PolynomialExpr> children_;
  std::vector<Subject> subjects_;
};

std::ostream& operator<<(std::ostream& os, const PolynomialExpr& p);

/// Parses `expr := term ('+' term)*; term := factor ('*'? factor)*;
/// factor := ident | '(' expr ')'`. Without a subject list an identifier is a
/// letter followed by digits or underscores, so "abc" is three subjects. With
/// `known`, identifiers are matched longest-first against those names.
/// Throws ParseError (empty input, syntax, duplicate or unknown variable).
PolynomialExpr parse_polynomial(std::string_view text);
PolynomialExpr parse_polynomial(std::string_view text, const std::vector<Subject>& known);

/// Recursive split: disconnected alliance subgraph -> sum over its
/// components, else disconnected conflict subgraph -> product over its
/// components. Throws NotDecomposable when both are connected.
PolynomialExpr graph_to_polynomial(const RelationshipGraph& g);

/// Pair label is the kind of the pair's lowest common ancestor.
RelationshipGraph polynomial_to_graph(const PolynomialExpr& p);

struct StratificationTree {
  PolynomialExpr stratum;
  std::vector<StratificationTree> children;
};

StratificationTree stratify(const PolynomialExpr& p);

}  // namespace erg
