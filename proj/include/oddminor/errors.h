#ifndef ODDMINOR_ERRORS_H_
#define ODDMINOR_ERRORS_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace oddminor {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input text that does not follow one of the documented grammars.
class ParseError : public Error {
 public:
  enum class Kind { kMalformed, kSelfLoop, kRange };

  ParseError(Kind kind, int line, const std::string& what);

  Kind kind() const { return kind_; }
  /// 1-based line number, 0 when the error is not tied to a line.
  int line() const { return line_; }

 private:
  Kind kind_;
  int line_;
};

/// Invalid generator or search parameters.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A structural precondition does not hold (disconnected set, broken partition).
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// A caller-supplied object violates the contract of the operation.
class ContractError : public Error {
 public:
  using Error::Error;
};

/// A search or enumeration would exceed its configured budget.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Reports a broken internal invariant on stderr and aborts. Reaching this
/// means a bug, never bad input.
[[noreturn]] void panic(std::string_view message);

}  // namespace oddminor

#endif  // ODDMINOR_ERRORS_H_
