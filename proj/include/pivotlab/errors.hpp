#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pivotlab {

// Base of every error raised by the library. Callers that only care about
// "bad input" can catch this; the CLI maps it to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LabelError : public Error {
 public:
  using Error::Error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

// All (weighted) abscissae coincide, so no y-on-x line exists.
class DegenerateXError : public Error {
 public:
  using Error::Error;
};

class DegenerateIntervalError : public Error {
 public:
  using Error::Error;
};

class DegenerateTriangleError : public Error {
 public:
  using Error::Error;
};

class DegenerateStateError : public Error {
 public:
  using Error::Error;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

class FormatError : public Error {
 public:
  FormatError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  /// 1-based line of the offending input, 0 when not line oriented.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace pivotlab
