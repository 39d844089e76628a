#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace supply {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Vectors or generator sets whose lengths disagree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Malformed input document. `position()` is a byte offset when known.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position = npos)
      : Error(position == npos ? what : what + " (at byte " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::size_t position_;
};

/// A value outside its admissible domain (negative price under a nonnegative domain, N < 2, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Operation not available in the current scalar mode.
class ModeError : public Error {
 public:
  using Error::Error;
};

}  // namespace supply
