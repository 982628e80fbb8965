#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace patsep {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LengthError : public Error {
 public:
  using Error::Error;
};

class DisjointnessError : public Error {
 public:
  using Error::Error;
};

class SymbolError : public Error {
 public:
  using Error::Error;
};

class SmallnessError : public Error {
 public:
  using Error::Error;
};

/// A configured cap (candidate count, search nodes) was exceeded.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// A produced witness failed its own re-check. Signals an internal bug or bad input witness.
class VerificationError : public Error {
 public:
  using Error::Error;
};

/// Some good string has no admissible pattern at all.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

class ColoringError : public Error {
 public:
  using Error::Error;
};

class FeatureSetError : public Error {
 public:
  using Error::Error;
};

class GraphError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. `line()` is 1-based; 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(line == 0 ? message : "line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace patsep
