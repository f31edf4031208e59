#pragma once

// Alternative-valued functions of subject variables, stored per atom as an
// exhaustive truth table over the atom bits of the variables.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "erg/algebra.hpp"
#include "erg/group.hpp"

namespace erg {

using Assignment = std::map<Subject, Alternative>;

inline constexpr int kMaxVariables = 16;

/// A 2^n-entry bit table. Entry j is the output for the input whose k-th
/// variable takes bit k of j.
class TruthTable {
 public:
  TruthTable() : TruthTable(0) {}
  explicit TruthTable(int arity, bool fill = false);
  /// Projection onto variable `k`.
  static TruthTable projection(int arity, int k);

  int arity() const noexcept { return arity_; }
  std::size_t size() const noexcept { return std::size_t{1} << arity_; }
  bool get(std::size_t index) const { return ((words_[index >> 6] >> (index & 63)) & 1u) != 0; }
  void set(std::size_t index, bool value);

  bool all_zero() const;
  bool all_one() const;

  TruthTable& operator|=(const TruthTable& o);
  TruthTable& operator&=(const TruthTable& o);
  TruthTable operator~() const;

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

 private:
  void trim();

  int arity_;
  std::vector<std::uint64_t> words_;
};

class SymbolicAlt {
 public:
  /// Constant `value`, optionally carried over (ignored) variables.
  static SymbolicAlt constant(const Alternative& value, std::vector<Subject> variables = {});
  /// The identity function of `s`. `variables` defaults to {s}.
  static SymbolicAlt variable(const Subject& s, int width = kDefaultWidth,
                              std::vector<Subject> variables = {});
  /// One table per atom, each of arity variables.size(); `variables` must be
  /// strictly ascending. Throws erg::Error otherwise.
  static SymbolicAlt from_tables(std::vector<Subject> variables, std::vector<TruthTable> tables);
  /// Interprets sums as joins and products as meets.
  static SymbolicAlt from_polynomial(const PolynomialExpr& p, int width = kDefaultWidth);

  /// Sorted, duplicate-free.
  const std::vector<Subject>& variables() const noexcept { return variables_; }
  int width() const noexcept { return width_; }
  int arity() const noexcept { return static_cast<int>(variables_.size()); }
  const TruthTable& table(int atom) const { return tables_.at(atom); }

  /// The value when every atom table is constant.
  std::optional<Alternative> constant_value() const;
  bool is_constant() const { return constant_value().has_value(); }
  bool depends_on(const Subject& s) const;
  /// Variables the output actually depends on, in order.
  std::vector<Subject> support() const;

  /// Same function over a superset of the variables.
  SymbolicAlt extended(const std::vector<Subject>& variables) const;
  /// Same function with irrelevant variables dropped.
  SymbolicAlt minimized() const;

  /// Throws MissingInfluence if a variable has no value, WidthMismatch if a
  /// value has the wrong width. Keys that are not variables are ignored.
  Alternative evaluate(const Assignment& assignment) const;
  /// Residual function over the variables not bound by `partial`.
  SymbolicAlt substitute(const Assignment& partial) const;

  /// Sum-of-products rendering, e.g. "{1,0,0}c + d", "~c", "{1,1,1}".
  std::string to_string() const;

  /// Semantic equality: both sides are compared over the union of their
  /// variables.
  friend bool operator==(const SymbolicAlt& x, const SymbolicAlt& y);

  friend SymbolicAlt join(const SymbolicAlt& x, const SymbolicAlt& y);
  friend SymbolicAlt meet(const SymbolicAlt& x, const SymbolicAlt& y);
  friend SymbolicAlt complement(const SymbolicAlt& x);

 private:
  SymbolicAlt(std::vector<Subject> variables, int width, std::vector<TruthTable> tables);
  static void check_arity(std::size_t n);
  std::optional<int> position(const Subject& s) const;

  std::vector<Subject> variables_;
  int width_ = kDefaultWidth;
  std::vector<TruthTable> tables_;
};

SymbolicAlt join(const SymbolicAlt& x, const SymbolicAlt& y);
SymbolicAlt meet(const SymbolicAlt& x, const SymbolicAlt& y);
SymbolicAlt complement(const SymbolicAlt& x);

inline SymbolicAlt operator|(const SymbolicAlt& x, const SymbolicAlt& y) { return join(x, y); }
inline SymbolicAlt operator&(const SymbolicAlt& x, const SymbolicAlt& y) { return meet(x, y); }
inline SymbolicAlt operator~(const SymbolicAlt& x) { return complement(x); }

std::ostream& operator<<(std::ostream& os, const SymbolicAlt& f);

}  // namespace erg
