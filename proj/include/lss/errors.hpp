#pragma once

#include <stdexcept>
#include <string>

namespace lss {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Monomials or orders over a different number of variables were combined.
class DimensionError : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed tree text or JSON.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Vertex index outside 1..n.
class BadVertex : public Error {
 public:
  using Error::Error;
};

/// Edge set is not a tree (cycle, disconnected, duplicate or wrong count).
class NotATree : public Error {
 public:
  using Error::Error;
};

/// A documented precondition (ascending labeling, independent set) failed.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Input exceeds a configured enumeration cap.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace lss
