#pragma once

// Boolean algebra of alternatives: fixed-width bit vectors under join (OR),
// meet (AND) and complement (NOT), ordered by bit inclusion.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace erg {

inline constexpr int kDefaultWidth = 3;
inline constexpr int kMaxWidth = 24;

/// One coordinate of an alternative. For the default width these are the
/// pleasure, arousal and dominance scales.
struct Atom {
  int index = 0;
  std::string label;

  friend bool operator==(const Atom&, const Atom&) = default;
};

/// Atoms for the given width: P, A, D for width 3, X0..X{w-1} otherwise.
std::vector<Atom> default_atoms(int width = kDefaultWidth);

/// An element of the algebra. Atom i is stored at integer bit (width-1-i), so
/// the integer code of {1,0,0} is 4 and codes order lexicographically.
class Alternative {
 public:
  /// Bottom element of the default width.
  constexpr Alternative() = default;

  /// From the integer encoding. Throws erg::Error if the code does not fit.
  static Alternative from_code(std::uint32_t code, int width = kDefaultWidth);
  /// From per-atom bits in atom order, e.g. {1,0,1}.
  static Alternative from_bits(std::initializer_list<int> bits);
  static Alternative from_bits(const std::vector<bool>& bits);
  static Alternative bottom(int width = kDefaultWidth);
  static Alternative top(int width = kDefaultWidth);
  /// Parses the brace form "{1,0,1}". Whitespace around digits is accepted.
  static Alternative parse(std::string_view text);

  constexpr int width() const noexcept { return width_; }
  constexpr std::uint32_t code() const noexcept { return code_; }
  bool atom(int index) const;
  Alternative with_atom(int index, bool value) const;
  int popcount() const noexcept;

  bool is_bottom() const noexcept { return code_ == 0; }
  bool is_top() const noexcept { return code_ == mask(width_); }

  /// Brace form, e.g. "{1,0,1}".
  std::string to_string() const;

  friend constexpr bool operator==(const Alternative&, const Alternative&) = default;
  /// Total order: by width, then by integer code.
  friend constexpr auto operator<=>(const Alternative& a, const Alternative& b) {
    if (auto c = a.width_ <=> b.width_; c != 0) return c;
    return a.code_ <=> b.code_;
  }

  static constexpr std::uint32_t mask(int width) noexcept {
    return width >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << width) - 1;
  }

 private:
  constexpr Alternative(std::uint32_t code, int width) : code_(code), width_(width) {}

  std::uint32_t code_ = 0;
  int width_ = kDefaultWidth;
};

std::ostream& operator<<(std::ostream& os, const Alternative& a);

/// Bitwise OR. Throws WidthMismatch.
Alternative join(const Alternative& x, const Alternative& y);
/// Bitwise AND. Throws WidthMismatch.
Alternative meet(const Alternative& x, const Alternative& y);
Alternative complement(const Alternative& x);
/// True iff every bit of `b` is set in `a` (a ⊇ b). Throws WidthMismatch.
bool contains(const Alternative& a, const Alternative& b);

/// All x with lower ⊆ x ⊆ upper, ascending by code. Empty when upper ⊉ lower.
std::vector<Alternative> interval(const Alternative& lower, const Alternative& upper);

/// Every alternative of the given width, ascending by code.
std::vector<Alternative> all_alternatives(int width = kDefaultWidth);

inline Alternative operator|(const Alternative& x, const Alternative& y) { return join(x, y); }
inline Alternative operator&(const Alternative& x, const Alternative& y) { return meet(x, y); }
inline Alternative operator~(const Alternative& x) { return complement(x); }

}  // namespace erg
