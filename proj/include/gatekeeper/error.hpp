#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gatekeeper {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text. line() is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_{line} {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class DuplicateIdError : public Error {
 public:
  using Error::Error;
};

// A Flight, Schedule, Assignment or config violates its invariants.
class InvariantError : public Error {
 public:
  using Error::Error;
};

class UnknownFlightError : public Error {
 public:
  using Error::Error;
};

class GateRangeError : public Error {
 public:
  using Error::Error;
};

// A pairwise term was requested for a pair whose denominator is not positive.
class UndefinedTermError : public Error {
 public:
  using Error::Error;
};

// No assignment satisfies the no-overlap constraint with the given gate count.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

class InstanceTooLargeError : public Error {
 public:
  using Error::Error;
};

}  // namespace gatekeeper
