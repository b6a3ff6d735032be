#pragma once

#include <stdexcept>
#include <string>

namespace qec {

// Base of every error raised by the library. Callers that only need to
// distinguish "bad input to a computation" from programming errors catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GraphError : public Error {
 public:
  using Error::Error;
};

class DuplicateEdgeError : public GraphError {
 public:
  using GraphError::GraphError;
};

class SelfLoopError : public GraphError {
 public:
  using GraphError::GraphError;
};

class VertexRangeError : public GraphError {
 public:
  using GraphError::GraphError;
};

class DisconnectedGraphError : public GraphError {
 public:
  using GraphError::GraphError;
};

class EmbeddingError : public GraphError {
 public:
  using GraphError::GraphError;
};

class NotATreeError : public GraphError {
 public:
  using GraphError::GraphError;
};

// Malformed edge-list text.
class ParseError : public GraphError {
 public:
  using GraphError::GraphError;
};

// A parameter outside the domain of an operation (nonpositive weight,
// empty list, bad tolerance, r below the minimum, ...).
class InvalidParameterError : public Error {
 public:
  using Error::Error;
};

// f evaluated at a pole or at a nonpositive argument.
class PoleError : public Error {
 public:
  using Error::Error;
};

}  // namespace qec
