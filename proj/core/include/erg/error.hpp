#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace erg {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands of a binary operation were built with different widths.
class WidthMismatch : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input. `position()` is a 0-based character offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// The relationship graph admits no polynomial representation.
class NotDecomposable : public Error {
 public:
  using Error::Error;
};

/// A relationship graph was built without labelling every pair.
class IncompleteGraph : public Error {
 public:
  using Error::Error;
};

/// An operation needed a concrete value for a subject that was not given.
class MissingInfluence : public Error {
 public:
  using Error::Error;
};

}  // namespace erg
