#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace heis {

// Base for every domain error raised by the library.  The CLI prints what()
// verbatim.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GenusMismatch : public Error {
 public:
  GenusMismatch(int lhs, int rhs)
      : Error("genus mismatch: " + std::to_string(lhs) + " vs " +
              std::to_string(rhs)) {}
};

class ParseError : public Error {
 public:
  ParseError(std::string const& msg, std::size_t pos)
      : Error("parse error at position " + std::to_string(pos) + ": " + msg),
        position_(pos) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

inline void require_same_genus(int lhs, int rhs) {
  if (lhs != rhs) throw GenusMismatch(lhs, rhs);
}

}  // namespace heis
