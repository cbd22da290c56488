#pragma once

#include <stdexcept>
#include <string>

namespace rbmtopo {

// Violated precondition (bad dimensions, out-of-range indices, malformed specs).
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Requested enumeration exceeds the dense cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A gadget or pipeline stage could not produce a network.
class SynthesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The mod-2 phase fit has no solution.
class FitError : public SynthesisError {
 public:
  using SynthesisError::SynthesisError;
};

// Hidden-variable elimination hit a structure it does not handle.
class StructureError : public SynthesisError {
 public:
  using SynthesisError::SynthesisError;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace rbmtopo
