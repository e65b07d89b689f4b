#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rlroute {

// Raised for out-of-range generator, routing or learning parameters.
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A generator could not produce a connected topology.
class GenerationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonAdjacentNodes : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnreachableDestination : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptyPath : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed input text. `line()` is 1-based; 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line)
      : std::runtime_error(line == 0 ? message
                                     : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Well-formed input that violates a field constraint. `field()` is a dotted path.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(const std::string& field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(field), message_(message) {}

  const std::string& field() const noexcept { return field_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::string field_;
  std::string message_;
};

}  // namespace rlroute
