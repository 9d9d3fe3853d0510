#pragma once

#include <stdexcept>
#include <string>

namespace netcomm {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input file (carries a 1-based line number when known).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, long line = -1)
      : Error(line >= 0 ? what + " (line " + std::to_string(line) + ")" : what),
        line_(line) {}
  long line() const { return line_; }

 private:
  long line_;
};

/// Recognized but unsupported file format (e.g. Matrix Market "array").
class UnsupportedFormatError : public Error {
 public:
  using Error::Error;
};

/// Invalid argument value (bad fraction, non-bijective permutation, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Edge update/downdate precondition violated.
class InvalidModificationError : public Error {
 public:
  using Error::Error;
};

/// Iterative kernel failed to converge; carries the last residual seen.
class NumericalFailure : public Error {
 public:
  NumericalFailure(const std::string& what, double residual)
      : Error(what + " (last residual " + std::to_string(residual) + ")"),
        residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

/// A scoring method cannot be applied to this graph (e.g. eig on a DAG).
class MethodInapplicableError : public Error {
 public:
  using Error::Error;
};

/// Problem size exceeds a configured dense/brute-force guard.
class CapacityError : public Error {
 public:
  using Error::Error;
};

}  // namespace netcomm
