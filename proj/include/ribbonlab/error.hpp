#pragma once

#include <stdexcept>
#include <string>

namespace ribbonlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The graph violates a ribbon-graph invariant (see validate()).
class StructuralError : public Error {
 public:
  using Error::Error;
};

class UnknownEdgeError : public Error {
 public:
  explicit UnknownEdgeError(const std::string& name) : Error("unknown edge '" + name + "'") {}
};

class UnknownVertexError : public Error {
 public:
  explicit UnknownVertexError(const std::string& name) : Error("unknown vertex '" + name + "'") {}
};

/// An arrow presentation in which some label does not occur exactly twice.
class MalformedPresentationError : public Error {
 public:
  using Error::Error;
};

/// Input that is well formed but outside an operation's domain
/// (non-Eulerian input, non-orientable host, overlapping edge sets...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A result that the mathematics guarantees failed to materialize.
/// Always an implementation bug.
class InvariantFailure : public Error {
 public:
  using Error::Error;
};

class TooLargeError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace ribbonlab
