#include "erg/group.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <ostream>
#include <set>

#include "erg/error.hpp"

namespace erg {

// ---------------------------------------------------------------- Subject

bool Subject::is_valid_id(std::string_view id) {
  if (id.empty() || !std::isalpha(static_cast<unsigned char>(id.front()))) return false;
  return std::all_of(id.begin(), id.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

Subject::Subject(std::string id) : id_(std::move(id)) {
  if (!is_valid_id(id_)) throw Error("invalid subject id '" + id_ + "'");
}

std::ostream& operator<<(std::ostream& os, const Subject& s) { return os << s.id(); }

std::string_view to_string(Relation r) {
  return r == Relation::Alliance ? "alliance" : "conflict";
}

// ---------------------------------------------------------- RelationshipGraph

RelationshipGraph::RelationshipGraph(std::vector<Subject> subjects, const std::vector<Edge>& edges)
    : subjects_(std::move(subjects)) {
  const std::size_t n = subjects_.size();
  {
    std::set<Subject> seen;
    for (const auto& s : subjects_) {
      if (!seen.insert(s).second) throw Error("duplicate subject '" + s.id() + "'");
    }
  }
  std::vector<std::optional<Relation>> labels(n * n);
  for (const auto& e : edges) {
    auto i = index_of(e.a);
    auto j = index_of(e.b);
    if (!i) throw Error("relation names unknown subject '" + e.a.id() + "'");
    if (!j) throw Error("relation names unknown subject '" + e.b.id() + "'");
    if (*i == *j) throw Error("self relation on '" + e.a.id() + "'");
    auto& slot = labels[*i * n + *j];
    if (slot && *slot != e.relation) {
      throw Error("contradictory labels on pair " + e.a.id() + "," + e.b.id());
    }
    slot = e.relation;
    labels[*j * n + *i] = e.relation;
  }
  labels_.assign(n * n, Relation::Alliance);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!labels[i * n + j]) {
        throw IncompleteGraph("incomplete graph: pair " + subjects_[i].id() + "," +
                              subjects_[j].id() + " unlabeled");
      }
      labels_[i * n + j] = labels_[j * n + i] = *labels[i * n + j];
    }
  }
}

std::optional<std::size_t> RelationshipGraph::index_of(const Subject& s) const {
  auto it = std::find(subjects_.begin(), subjects_.end(), s);
  if (it == subjects_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - subjects_.begin());
}

Relation RelationshipGraph::relation(const Subject& a, const Subject& b) const {
  auto i = index_of(a);
  auto j = index_of(b);
  if (!i || !j || *i == *j) throw Error("no relation between " + a.id() + " and " + b.id());
  return relation(*i, *j);
}

std::vector<RelationshipGraph::Edge> RelationshipGraph::edges() const {
  std::vector<Subject> sorted = subjects_;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Edge> out;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      out.push_back({sorted[i], sorted[j], relation(sorted[i], sorted[j])});
    }
  }
  return out;
}

bool operator==(const RelationshipGraph& x, const RelationshipGraph& y) {
  if (x.size() != y.size()) return false;
  std::vector<Subject> xs = x.subjects_, ys = y.subjects_;
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  if (xs != ys) return false;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      if (x.relation(xs[i], xs[j]) != y.relation(xs[i], xs[j])) return false;
    }
  }
  return true;
}

// ------------------------------------------------------------ PolynomialExpr

PolynomialExpr PolynomialExpr::variable(Subject s) {
  PolynomialExpr p;
  p.kind_ = Kind::Variable;
  p.subjects_.push_back(std::move(s));
  return p;
}

PolynomialExpr PolynomialExpr::sum(std::vector<PolynomialExpr> operands) {
  return make_nary(Kind::Sum, std::move(operands));
}

PolynomialExpr PolynomialExpr::product(std::vector<PolynomialExpr> operands) {
  return make_nary(Kind::Product, std::move(operands));
}

PolynomialExpr PolynomialExpr::make_nary(Kind kind, std::vector<PolynomialExpr> operands) {
  std::vector<PolynomialExpr> flat;
  for (auto& op : operands) {
    if (op.kind_ == kind) {
      for (auto& c : op.children_) flat.push_back(std::move(c));
    } else {
      flat.push_back(std::move(op));
    }
  }
  if (flat.size() < 2) {
    throw Error(std::string(kind == Kind::Sum ? "sum" : "product") +
                " needs at least two operands");
  }
  std::sort(flat.begin(), flat.end(), [](const PolynomialExpr& a, const PolynomialExpr& b) {
    return a.min_subject() < b.min_subject();
  });
  PolynomialExpr p;
  p.kind_ = kind;
  for (const auto& c : flat) {
    p.subjects_.insert(p.subjects_.end(), c.subjects_.begin(), c.subjects_.end());
  }
  std::sort(p.subjects_.begin(), p.subjects_.end());
  auto dup = std::adjacent_find(p.subjects_.begin(), p.subjects_.end());
  if (dup != p.subjects_.end()) throw Error("subject '" + dup->id() + "' appears twice");
  p.children_ = std::move(flat);
  return p;
}

const Subject& PolynomialExpr::subject() const {
  if (!is_variable()) throw Error("polynomial node is not a variable");
  return subjects_.front();
}

namespace {

// Ids that the single-letter lexer reads back as one token.
bool is_short_id(const std::string& id) {
  return std::all_of(id.begin() + 1, id.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

std::string PolynomialExpr::to_string() const {
  const bool juxtapose = std::all_of(subjects_.begin(), subjects_.end(),
                                     [](const Subject& s) { return is_short_id(s.id()); });
  return render(juxtapose);
}

std::string PolynomialExpr::render(bool juxtapose) const {
  switch (kind_) {
    case Kind::Variable:
      return subjects_.front().id();
    case Kind::Sum: {
      std::string out;
      for (std::size_t i = 0; i < children_.size(); ++i) {
        if (i > 0) out += '+';
        out += children_[i].render(juxtapose);
      }
      return out;
    }
    case Kind::Product: {
      std::string out;
      for (std::size_t i = 0; i < children_.size(); ++i) {
        if (i > 0 && !juxtapose) out += '*';
        const auto& c = children_[i];
        if (c.kind_ == Kind::Sum) {
          out += '(' + c.render(juxtapose) + ')';
        } else {
          out += c.render(juxtapose);
        }
      }
      return out;
    }
  }
  return {};
}

std::ostream& operator<<(std::ostream& os, const PolynomialExpr& p) { return os << p.to_string(); }

// -------------------------------------------------------------------- parser

namespace {

class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, const std::vector<Subject>* known)
      : text_(text), known_(known) {}

  PolynomialExpr parse() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("empty polynomial", pos_);
    PolynomialExpr e = expr();
    skip_ws();
    if (pos_ < text_.size()) {
      throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    }
    return e;
  }

 private:
  PolynomialExpr expr() {
    std::vector<PolynomialExpr> terms;
    terms.push_back(term());
    while (peek() == '+') {
      ++pos_;
      terms.push_back(term());
    }
    return terms.size() == 1 ? std::move(terms.front()) : PolynomialExpr::sum(std::move(terms));
  }

  PolynomialExpr term() {
    std::vector<PolynomialExpr> factors;
    factors.push_back(factor());
    while (true) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        factors.push_back(factor());
      } else if (c == '(' || std::isalpha(static_cast<unsigned char>(c))) {
        factors.push_back(factor());
      } else {
        break;
      }
    }
    return factors.size() == 1 ? std::move(factors.front())
                               : PolynomialExpr::product(std::move(factors));
  }

  PolynomialExpr factor() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      PolynomialExpr e = expr();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) return PolynomialExpr::variable(ident());
    if (c == '\0') throw ParseError("unexpected end of polynomial", pos_);
    throw ParseError(std::string("expected subject or '(' but found '") + c + "'", pos_);
  }

  Subject ident() {
    const std::size_t start = pos_;
    std::string id;
    if (known_ != nullptr) {
      for (const auto& s : *known_) {
        if (s.id().size() > id.size() && text_.substr(pos_, s.id().size()) == s.id()) id = s.id();
      }
      if (id.empty()) throw ParseError("unknown subject", start);
    } else {
      std::size_t end = pos_ + 1;
      while (end < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) {
        ++end;
      }
      id = std::string(text_.substr(pos_, end - pos_));
    }
    pos_ += id.size();
    if (!seen_.insert(id).second) throw ParseError("duplicate subject '" + id + "'", start);
    return Subject(id);
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  const std::vector<Subject>* known_;
  std::size_t pos_ = 0;
  std::set<std::string> seen_;
};

}  // namespace

PolynomialExpr parse_polynomial(std::string_view text) {
  return PolynomialParser(text, nullptr).parse();
}

PolynomialExpr parse_polynomial(std::string_view text, const std::vector<Subject>& known) {
  return PolynomialParser(text, &known).parse();
}

// ------------------------------------------------------------- decomposition

namespace {

// Connected components of the subgraph of `g` restricted to `vertices` whose
// edges carry `label`. Components are listed by first vertex.
std::vector<std::vector<std::size_t>> components(const RelationshipGraph& g,
                                                 const std::vector<std::size_t>& vertices,
                                                 Relation label) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> done(vertices.size(), false);
  for (std::size_t start = 0; start < vertices.size(); ++start) {
    if (done[start]) continue;
    std::vector<std::size_t> comp;
    std::vector<std::size_t> stack{start};
    done[start] = true;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      comp.push_back(vertices[u]);
      for (std::size_t v = 0; v < vertices.size(); ++v) {
        if (!done[v] && g.relation(vertices[u], vertices[v]) == label) {
          done[v] = true;
          stack.push_back(v);
        }
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

PolynomialExpr decompose(const RelationshipGraph& g, const std::vector<std::size_t>& vertices) {
  if (vertices.size() == 1) return PolynomialExpr::variable(g.subjects()[vertices.front()]);
  for (Relation label : {Relation::Alliance, Relation::Conflict}) {
    auto comps = components(g, vertices, label);
    if (comps.size() < 2) continue;
    std::vector<PolynomialExpr> parts;
    parts.reserve(comps.size());
    for (const auto& c : comps) parts.push_back(decompose(g, c));
    // Blocks with no alliance between them are in conflict: a sum.
    return label == Relation::Alliance ? PolynomialExpr::sum(std::move(parts))
                                       : PolynomialExpr::product(std::move(parts));
  }
  std::string names;
  for (std::size_t v : vertices) names += (names.empty() ? "" : " ") + g.subjects()[v].id();
  throw NotDecomposable("group is not decomposable: subjects {" + names +
                        "} are connected in both the alliance and the conflict graph");
}

void label_pairs(const PolynomialExpr& p, std::vector<RelationshipGraph::Edge>& edges) {
  if (p.is_variable()) return;
  const Relation r = p.kind() == PolynomialExpr::Kind::Product ? Relation::Alliance
                                                                : Relation::Conflict;
  const auto& ch = p.children();
  for (std::size_t i = 0; i < ch.size(); ++i) {
    label_pairs(ch[i], edges);
    for (std::size_t j = i + 1; j < ch.size(); ++j) {
      for (const auto& a : ch[i].subjects()) {
        for (const auto& b : ch[j].subjects()) edges.push_back({a, b, r});
      }
    }
  }
}

}  // namespace

PolynomialExpr graph_to_polynomial(const RelationshipGraph& g) {
  if (g.size() == 0) throw Error("empty group");
  std::vector<std::size_t> all(g.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return decompose(g, all);
}

RelationshipGraph polynomial_to_graph(const PolynomialExpr& p) {
  std::vector<RelationshipGraph::Edge> edges;
  label_pairs(p, edges);
  return RelationshipGraph(p.subjects(), edges);
}

StratificationTree stratify(const PolynomialExpr& p) {
  StratificationTree t{p, {}};
  for (const auto& c : p.children()) t.children.push_back(stratify(c));
  return t;
}

}  // namespace erg
