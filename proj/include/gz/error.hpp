#pragma once

#include <stdexcept>
#include <string>

namespace gz {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Requested recursion depth above the configured cap.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

/// Argument sits on a pole of the function being evaluated.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Series, shifting, and term budget cannot reach the error target.
class PrecisionUnreachable : public Error {
 public:
  using Error::Error;
};

class MissingJetValue : public Error {
 public:
  using Error::Error;
};

/// Evaluation point outside the admissible sector |z| >= 10, |arg z| <= pi/2.
class SectorError : public Error {
 public:
  using Error::Error;
};

class DivisionNearZero : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Polynomial is identically zero, or every dominance coefficient vanishes.
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace gz
