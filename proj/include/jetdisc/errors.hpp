#pragma once

#include <stdexcept>
#include <string>

namespace jetdisc {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live over different variable sets.
class VarSetMismatch : public Error {
 public:
  using Error::Error;
};

class UnknownVariable : public Error {
 public:
  explicit UnknownVariable(const std::string& name)
      : Error("unknown variable '" + name + "'") {}
};

/// Malformed polynomial text, scalar text or JSON document.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the operation's domain (degree bounds, chart ranges, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A Groebner-basis computation hit its pair bound or deadline.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace jetdisc
