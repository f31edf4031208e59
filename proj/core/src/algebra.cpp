#include "erg/algebra.hpp"

#include <bit>
#include <cctype>
#include <ostream>

#include "erg/error.hpp"

namespace erg {
namespace {

void check_width(int width) {
  if (width < 1 || width > kMaxWidth) {
    throw Error("alternative width " + std::to_string(width) + " outside [1, " +
                std::to_string(kMaxWidth) + "]");
  }
}

void check_same_width(const Alternative& x, const Alternative& y, const char* op) {
  if (x.width() != y.width()) {
    throw WidthMismatch(std::string(op) + ": width mismatch (" + std::to_string(x.width()) +
                        " vs " + std::to_string(y.width()) + ")");
  }
}

}  // namespace

std::vector<Atom> default_atoms(int width) {
  check_width(width);
  std::vector<Atom> atoms;
  atoms.reserve(width);
  if (width == 3) {
    atoms = {{0, "P"}, {1, "A"}, {2, "D"}};
    return atoms;
  }
  for (int i = 0; i < width; ++i) atoms.push_back({i, "X" + std::to_string(i)});
  return atoms;
}

Alternative Alternative::from_code(std::uint32_t code, int width) {
  check_width(width);
  if ((code & ~mask(width)) != 0) {
    throw Error("code " + std::to_string(code) + " does not fit width " + std::to_string(width));
  }
  return Alternative(code, width);
}

Alternative Alternative::from_bits(std::initializer_list<int> bits) {
  std::vector<bool> v;
  for (int b : bits) {
    if (b != 0 && b != 1) throw Error("alternative bits must be 0 or 1");
    v.push_back(b == 1);
  }
  return from_bits(v);
}

Alternative Alternative::from_bits(const std::vector<bool>& bits) {
  const int width = static_cast<int>(bits.size());
  check_width(width);
  std::uint32_t code = 0;
  for (bool b : bits) code = (code << 1) | (b ? 1u : 0u);
  return Alternative(code, width);
}

Alternative Alternative::bottom(int width) {
  check_width(width);
  return Alternative(0, width);
}

Alternative Alternative::top(int width) {
  check_width(width);
  return Alternative(mask(width), width);
}

Alternative Alternative::parse(std::string_view text) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i >= text.size() || text[i] != '{') throw ParseError("expected '{'", i);
  ++i;
  std::vector<bool> bits;
  while (true) {
    skip_ws();
    if (i >= text.size()) throw ParseError("unterminated alternative", i);
    if (text[i] != '0' && text[i] != '1') throw ParseError("expected 0 or 1", i);
    bits.push_back(text[i] == '1');
    ++i;
    skip_ws();
    if (i < text.size() && text[i] == ',') {
      ++i;
      continue;
    }
    if (i < text.size() && text[i] == '}') {
      ++i;
      break;
    }
    throw ParseError("expected ',' or '}'", i);
  }
  skip_ws();
  if (i != text.size()) throw ParseError("trailing characters after alternative", i);
  if (static_cast<int>(bits.size()) > kMaxWidth) throw ParseError("alternative too wide", 0);
  return from_bits(bits);
}

bool Alternative::atom(int index) const {
  if (index < 0 || index >= width_) throw Error("atom index out of range");
  return ((code_ >> (width_ - 1 - index)) & 1u) != 0;
}

Alternative Alternative::with_atom(int index, bool value) const {
  if (index < 0 || index >= width_) throw Error("atom index out of range");
  const std::uint32_t bit = std::uint32_t{1} << (width_ - 1 - index);
  return Alternative(value ? (code_ | bit) : (code_ & ~bit), width_);
}

int Alternative::popcount() const noexcept { return std::popcount(code_); }

std::string Alternative::to_string() const {
  std::string out = "{";
  for (int i = 0; i < width_; ++i) {
    if (i > 0) out += ',';
    out += atom(i) ? '1' : '0';
  }
  out += '}';
  return out;
}

std::ostream& operator<<(std::ostream& os, const Alternative& a) { return os << a.to_string(); }

Alternative join(const Alternative& x, const Alternative& y) {
  check_same_width(x, y, "join");
  return Alternative::from_code(x.code() | y.code(), x.width());
}

Alternative meet(const Alternative& x, const Alternative& y) {
  check_same_width(x, y, "meet");
  return Alternative::from_code(x.code() & y.code(), x.width());
}

Alternative complement(const Alternative& x) {
  return Alternative::from_code(~x.code() & Alternative::mask(x.width()), x.width());
}

bool contains(const Alternative& a, const Alternative& b) {
  check_same_width(a, b, "contains");
  return (b.code() & ~a.code()) == 0;
}

std::vector<Alternative> interval(const Alternative& lower, const Alternative& upper) {
  std::vector<Alternative> out;
  if (!contains(upper, lower)) return out;
  // Enumerate subsets of the free bits in ascending order.
  const std::uint32_t free = upper.code() & ~lower.code();
  out.reserve(std::size_t{1} << std::popcount(free));
  std::uint32_t sub = 0;
  while (true) {
    out.push_back(Alternative::from_code(lower.code() | sub, lower.width()));
    if (sub == free) break;
    sub = (sub - free) & free;
  }
  return out;
}

std::vector<Alternative> all_alternatives(int width) {
  return interval(Alternative::bottom(width), Alternative::top(width));
}

}  // namespace erg
