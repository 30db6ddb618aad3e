#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rescut {

/// Instance or payload text that does not match the expected format.
/// The message carries "<source>:<line>: <what went wrong>".
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& message)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A caller broke a documented precondition (length mismatch, index out
/// of range, malformed construction input).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A rejected configuration value.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numeric routine failed to produce a trustworthy result.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Instance exceeds a hard solver limit; never silently degraded.
class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rescut
