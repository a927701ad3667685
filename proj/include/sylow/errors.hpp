#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sylow {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid (p, n) or other out-of-scope parameters.
class ParamError : public Error {
 public:
  using Error::Error;
};

/// Operands live in rings with a different number of variables.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A polynomial reads a variable its layer is not allowed to see.
class LayerError : public Error {
 public:
  using Error::Error;
};

/// A value is undefined for the given input (pdeg of the identity, lt of 0).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A size guard was exceeded.
class GuardError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace sylow
