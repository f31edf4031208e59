#include "erg/symbolic.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "erg/error.hpp"

namespace erg {

// ---------------------------------------------------------------- TruthTable

TruthTable::TruthTable(int arity, bool fill) : arity_(arity) {
  if (arity < 0 || arity > kMaxVariables) throw Error("truth table arity out of range");
  words_.assign(std::max<std::size_t>(1, size() / 64), fill ? ~std::uint64_t{0} : 0);
  trim();
}

TruthTable TruthTable::projection(int arity, int k) {
  TruthTable t(arity);
  for (std::size_t j = 0; j < t.size(); ++j) {
    if ((j >> k) & 1u) t.set(j, true);
  }
  return t;
}

void TruthTable::set(std::size_t index, bool value) {
  const std::uint64_t bit = std::uint64_t{1} << (index & 63);
  if (value) {
    words_[index >> 6] |= bit;
  } else {
    words_[index >> 6] &= ~bit;
  }
}

void TruthTable::trim() {
  if (size() < 64) words_[0] &= (std::uint64_t{1} << size()) - 1;
}

bool TruthTable::all_zero() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool TruthTable::all_one() const { return (~*this).all_zero(); }

TruthTable& TruthTable::operator|=(const TruthTable& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

TruthTable& TruthTable::operator&=(const TruthTable& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

TruthTable TruthTable::operator~() const {
  TruthTable t = *this;
  for (auto& w : t.words_) w = ~w;
  t.trim();
  return t;
}

// --------------------------------------------------------------- SymbolicAlt

namespace {

std::vector<Subject> sorted_unique(std::vector<Subject> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<Subject> merged(const std::vector<Subject>& x, const std::vector<Subject>& y) {
  std::vector<Subject> out;
  std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

void check_same_width(int x, int y, const char* op) {
  if (x != y) {
    throw WidthMismatch(std::string(op) + ": width mismatch (" + std::to_string(x) + " vs " +
                        std::to_string(y) + ")");
  }
}

}  // namespace

SymbolicAlt::SymbolicAlt(std::vector<Subject> variables, int width, std::vector<TruthTable> tables)
    : variables_(std::move(variables)), width_(width), tables_(std::move(tables)) {}

void SymbolicAlt::check_arity(std::size_t n) {
  if (n > static_cast<std::size_t>(kMaxVariables)) {
    throw Error("too many subjects: " + std::to_string(n) + " (limit " +
                std::to_string(kMaxVariables) + ")");
  }
}

SymbolicAlt SymbolicAlt::constant(const Alternative& value, std::vector<Subject> variables) {
  variables = sorted_unique(std::move(variables));
  check_arity(variables.size());
  const int n = static_cast<int>(variables.size());
  std::vector<TruthTable> tables;
  for (int i = 0; i < value.width(); ++i) tables.emplace_back(n, value.atom(i));
  return SymbolicAlt(std::move(variables), value.width(), std::move(tables));
}

SymbolicAlt SymbolicAlt::variable(const Subject& s, int width, std::vector<Subject> variables) {
  variables.push_back(s);
  variables = sorted_unique(std::move(variables));
  check_arity(variables.size());
  Alternative::bottom(width);  // validates width
  const int n = static_cast<int>(variables.size());
  const int k = static_cast<int>(std::find(variables.begin(), variables.end(), s) - variables.begin());
  std::vector<TruthTable> tables(width, TruthTable::projection(n, k));
  return SymbolicAlt(std::move(variables), width, std::move(tables));
}

SymbolicAlt SymbolicAlt::from_tables(std::vector<Subject> variables, std::vector<TruthTable> tables) {
  const std::size_t n = variables.size();
  if (!std::is_sorted(variables.begin(), variables.end()) ||
      std::adjacent_find(variables.begin(), variables.end()) != variables.end()) {
    throw Error("table variables must be strictly ascending");
  }
  check_arity(n);
  const int width = static_cast<int>(tables.size());
  Alternative::bottom(width);  // validates width
  for (const auto& t : tables) {
    if (t.arity() != static_cast<int>(n)) throw Error("table arity does not match variable count");
  }
  return SymbolicAlt(std::move(variables), width, std::move(tables));
}

SymbolicAlt SymbolicAlt::from_polynomial(const PolynomialExpr& p, int width) {
  const auto& vars = p.subjects();
  check_arity(vars.size());
  auto rec = [&](auto&& self, const PolynomialExpr& e) -> SymbolicAlt {
    if (e.is_variable()) return variable(e.subject(), width, vars);
    SymbolicAlt acc = self(self, e.children().front());
    for (std::size_t i = 1; i < e.children().size(); ++i) {
      SymbolicAlt c = self(self, e.children()[i]);
      acc = e.kind() == PolynomialExpr::Kind::Sum ? join(acc, c) : meet(acc, c);
    }
    return acc;
  };
  return rec(rec, p);
}

std::optional<int> SymbolicAlt::position(const Subject& s) const {
  auto it = std::lower_bound(variables_.begin(), variables_.end(), s);
  if (it == variables_.end() || *it != s) return std::nullopt;
  return static_cast<int>(it - variables_.begin());
}

std::optional<Alternative> SymbolicAlt::constant_value() const {
  Alternative out = Alternative::bottom(width_);
  for (int i = 0; i < width_; ++i) {
    if (tables_[i].all_one()) {
      out = out.with_atom(i, true);
    } else if (!tables_[i].all_zero()) {
      return std::nullopt;
    }
  }
  return out;
}

bool SymbolicAlt::depends_on(const Subject& s) const {
  auto k = position(s);
  if (!k) return false;
  const std::size_t bit = std::size_t{1} << *k;
  for (const auto& t : tables_) {
    for (std::size_t j = 0; j < t.size(); ++j) {
      if (!(j & bit) && t.get(j) != t.get(j | bit)) return true;
    }
  }
  return false;
}

std::vector<Subject> SymbolicAlt::support() const {
  std::vector<Subject> out;
  for (const auto& v : variables_) {
    if (depends_on(v)) out.push_back(v);
  }
  return out;
}

SymbolicAlt SymbolicAlt::extended(const std::vector<Subject>& variables) const {
  std::vector<Subject> vars = merged(variables_, sorted_unique(variables));
  if (vars == variables_) return *this;
  check_arity(vars.size());
  const int n = static_cast<int>(vars.size());
  // old position k lives at new position map[k]
  std::vector<int> map;
  for (const auto& v : variables_) {
    map.push_back(static_cast<int>(std::lower_bound(vars.begin(), vars.end(), v) - vars.begin()));
  }
  std::vector<TruthTable> tables;
  for (const auto& t : tables_) {
    TruthTable nt(n);
    for (std::size_t j = 0; j < nt.size(); ++j) {
      std::size_t old = 0;
      for (std::size_t k = 0; k < map.size(); ++k) old |= ((j >> map[k]) & 1u) << k;
      nt.set(j, t.get(old));
    }
    tables.push_back(std::move(nt));
  }
  return SymbolicAlt(std::move(vars), width_, std::move(tables));
}

SymbolicAlt SymbolicAlt::substitute(const Assignment& partial) const {
  std::vector<Subject> remaining;
  std::vector<int> remaining_pos;
  std::vector<std::pair<int, Alternative>> bound;
  for (int k = 0; k < arity(); ++k) {
    auto it = partial.find(variables_[k]);
    if (it == partial.end()) {
      remaining.push_back(variables_[k]);
      remaining_pos.push_back(k);
    } else {
      check_same_width(width_, it->second.width(), "substitute");
      bound.emplace_back(k, it->second);
    }
  }
  if (bound.empty()) return *this;
  const int n = static_cast<int>(remaining.size());
  std::vector<TruthTable> tables;
  for (int i = 0; i < width_; ++i) {
    std::size_t base = 0;
    for (const auto& [k, value] : bound) {
      if (value.atom(i)) base |= std::size_t{1} << k;
    }
    TruthTable nt(n);
    for (std::size_t j = 0; j < nt.size(); ++j) {
      std::size_t old = base;
      for (int r = 0; r < n; ++r) old |= ((j >> r) & 1u) << remaining_pos[r];
      nt.set(j, tables_[i].get(old));
    }
    tables.push_back(std::move(nt));
  }
  return SymbolicAlt(std::move(remaining), width_, std::move(tables));
}

Alternative SymbolicAlt::evaluate(const Assignment& assignment) const {
  for (const auto& v : variables_) {
    if (!assignment.count(v)) throw MissingInfluence("no value for subject '" + v.id() + "'");
  }
  return *substitute(assignment).constant_value();
}

SymbolicAlt SymbolicAlt::minimized() const {
  auto keep = support();
  if (keep.size() == variables_.size()) return *this;
  // Dropped variables are irrelevant, so any value works.
  Assignment fixed;
  for (const auto& v : variables_) {
    if (!std::binary_search(keep.begin(), keep.end(), v)) fixed.emplace(v, Alternative::bottom(width_));
  }
  return substitute(fixed);
}

bool operator==(const SymbolicAlt& x, const SymbolicAlt& y) {
  if (x.width_ != y.width_) return false;
  if (x.variables_ == y.variables_) return x.tables_ == y.tables_;
  auto vars = merged(x.variables_, y.variables_);
  return x.extended(vars).tables_ == y.extended(vars).tables_;
}

SymbolicAlt join(const SymbolicAlt& x, const SymbolicAlt& y) {
  check_same_width(x.width_, y.width_, "join");
  auto vars = merged(x.variables_, y.variables_);
  SymbolicAlt out = x.extended(vars);
  const SymbolicAlt other = y.extended(vars);
  for (int i = 0; i < out.width_; ++i) out.tables_[i] |= other.tables_[i];
  return out;
}

SymbolicAlt meet(const SymbolicAlt& x, const SymbolicAlt& y) {
  check_same_width(x.width_, y.width_, "meet");
  auto vars = merged(x.variables_, y.variables_);
  SymbolicAlt out = x.extended(vars);
  const SymbolicAlt other = y.extended(vars);
  for (int i = 0; i < out.width_; ++i) out.tables_[i] &= other.tables_[i];
  return out;
}

SymbolicAlt complement(const SymbolicAlt& x) {
  SymbolicAlt out = x;
  for (auto& t : out.tables_) t = ~t;
  return out;
}

// ------------------------------------------------------------------ printing

namespace {

constexpr int kMaxPrintedArity = 10;

// A product of literals over m variables in base 3: digit 0 = negated
// variable, 1 = plain variable, 2 = absent.
struct Cube {
  std::size_t index;
  std::vector<std::pair<int, bool>> literals;  // (variable, negated), ascending
  std::uint32_t atoms = 0;                       // atoms where the cube is an implicant
};

bool short_ids(const std::vector<Subject>& vars) {
  return std::all_of(vars.begin(), vars.end(), [](const Subject& s) {
    return std::all_of(s.id().begin() + 1, s.id().end(), [](char c) {
      return std::isdigit(static_cast<unsigned char>(c)) || c == '_';
    });
  });
}

}  // namespace

std::string SymbolicAlt::to_string() const {
  const SymbolicAlt f = minimized();
  if (auto k = f.constant_value()) return k->to_string();
  const int m = f.arity();
  if (m > kMaxPrintedArity) {
    std::string out = "<function of";
    for (const auto& v : f.variables_) out += " " + v.id();
    return out + ">";
  }

  std::vector<std::size_t> pow3(m + 1, 1);
  for (int k = 1; k <= m; ++k) pow3[k] = pow3[k - 1] * 3;
  const std::size_t ncubes = pow3[m];

  // Lowest absent-variable position and, for full minterms, the input index.
  std::vector<int> first_dc(ncubes, -1);
  std::vector<std::size_t> minterm(ncubes, 0);
  for (std::size_t c = 0; c < ncubes; ++c) {
    std::size_t rest = c;
    for (int k = 0; k < m; ++k, rest /= 3) {
      const std::size_t d = rest % 3;
      if (d == 2 && first_dc[c] < 0) first_dc[c] = k;
      if (d == 1) minterm[c] |= std::size_t{1} << k;
    }
  }
  auto digit = [&](std::size_t c, int k) { return (c / pow3[k]) % 3; };

  std::vector<std::vector<bool>> implicant(f.width_, std::vector<bool>(ncubes));
  for (int i = 0; i < f.width_; ++i) {
    auto& imp = implicant[i];
    for (std::size_t c = 0; c < ncubes; ++c) {
      const int k = first_dc[c];
      imp[c] = k < 0 ? f.tables_[i].get(minterm[c]) : imp[c - 2 * pow3[k]] && imp[c - pow3[k]];
    }
  }

  std::vector<Cube> candidates;
  for (std::size_t c = 0; c < ncubes; ++c) {
    bool prime_somewhere = false;
    std::uint32_t atoms = 0;
    for (int i = 0; i < f.width_; ++i) {
      if (!implicant[i][c]) continue;
      atoms |= std::uint32_t{1} << i;
      bool prime = true;
      for (int k = 0; k < m && prime; ++k) {
        const std::size_t d = digit(c, k);
        if (d != 2 && implicant[i][c + (2 - d) * pow3[k]]) prime = false;
      }
      prime_somewhere = prime_somewhere || prime;
    }
    if (!prime_somewhere) continue;
    Cube cube{c, {}, atoms};
    for (int k = 0; k < m; ++k) {
      const std::size_t d = digit(c, k);
      if (d != 2) cube.literals.emplace_back(k, d == 0);
    }
    candidates.push_back(std::move(cube));
  }

  // Cover every (atom, true minterm) pair; pair id = atom * 2^m + minterm.
  const std::size_t nmin = std::size_t{1} << m;
  auto covered_pairs = [&](const Cube& cube) {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < nmin; ++j) {
      bool inside = true;
      for (const auto& [k, neg] : cube.literals) {
        if ((((j >> k) & 1u) != 0) == neg) {
          inside = false;
          break;
        }
      }
      if (!inside) continue;
      for (int i = 0; i < f.width_; ++i) {
        if (cube.atoms & (std::uint32_t{1} << i)) out.push_back(i * nmin + j);
      }
    }
    return out;
  };
  std::vector<std::vector<std::size_t>> covers;
  for (const auto& c : candidates) covers.push_back(covered_pairs(c));

  std::vector<int> count(f.width_ * nmin, 0);
  for (const auto& cov : covers) {
    for (auto p : cov) ++count[p];
  }
  std::vector<bool> done(f.width_ * nmin, true);
  for (int i = 0; i < f.width_; ++i) {
    for (std::size_t j = 0; j < nmin; ++j) {
      if (f.tables_[i].get(j)) done[i * nmin + j] = false;
    }
  }
  std::vector<bool> chosen(candidates.size(), false);
  auto choose = [&](std::size_t c) {
    chosen[c] = true;
    for (auto p : covers[c]) done[p] = true;
  };
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    for (auto p : covers[c]) {
      if (!done[p] && count[p] == 1) {
        choose(c);
        break;
      }
    }
  }
  while (true) {
    std::size_t best = candidates.size();
    std::size_t best_gain = 0;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      if (chosen[c]) continue;
      std::size_t gain = 0;
      for (auto p : covers[c]) gain += done[p] ? 0 : 1;
      if (gain > best_gain ||
          (gain == best_gain && gain > 0 &&
           candidates[c].literals.size() < candidates[best].literals.size())) {
        best = c;
        best_gain = gain;
      }
    }
    if (best == candidates.size()) break;
    choose(best);
  }
  // Drop cubes made redundant by later choices.
  std::vector<int> usage(f.width_ * nmin, 0);
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    if (chosen[c]) {
      for (auto p : covers[c]) ++usage[p];
    }
  }
  for (std::size_t c = candidates.size(); c-- > 0;) {
    if (!chosen[c]) continue;
    if (std::all_of(covers[c].begin(), covers[c].end(), [&](auto p) { return usage[p] > 1; })) {
      chosen[c] = false;
      for (auto p : covers[c]) --usage[p];
    }
  }

  std::vector<const Cube*> terms;
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    if (chosen[c]) terms.push_back(&candidates[c]);
  }
  std::sort(terms.begin(), terms.end(), [](const Cube* a, const Cube* b) {
    return a->literals < b->literals;
  });

  const bool juxtapose = short_ids(f.variables_);
  const std::uint32_t all_atoms = Alternative::mask(f.width_);
  std::string out;
  for (const Cube* t : terms) {
    if (!out.empty()) out += " + ";
    if (t->atoms != all_atoms || t->literals.empty()) {
      Alternative coeff = Alternative::bottom(f.width_);
      for (int i = 0; i < f.width_; ++i) coeff = coeff.with_atom(i, (t->atoms >> i) & 1u);
      out += coeff.to_string();
    }
    bool first = true;
    for (const auto& [k, neg] : t->literals) {
      if (!first && !juxtapose) out += '*';
      first = false;
      if (neg) out += '~';
      out += f.variables_[k].id();
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const SymbolicAlt& f) { return os << f.to_string(); }

}  // namespace erg
