#pragma once

#include <stdexcept>
#include <string>

namespace geonet {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define GEONET_DEFINE_ERROR(Name)          \
  class Name : public Error {              \
   public:                                 \
    using Error::Error;                    \
  }

// Network construction.
GEONET_DEFINE_ERROR(DuplicateVertexAngle);
GEONET_DEFINE_ERROR(ZeroMultiplicity);
GEONET_DEFINE_ERROR(SelfLoopEdge);
GEONET_DEFINE_ERROR(DuplicateEdge);
GEONET_DEFINE_ERROR(IndexOutOfRange);

// Exact arithmetic.
GEONET_DEFINE_ERROR(ExactDataMissing);
GEONET_DEFINE_ERROR(InexactPosition);
GEONET_DEFINE_ERROR(ArithmeticError);

// Solver / replacement.
GEONET_DEFINE_ERROR(CrossingEdges);
GEONET_DEFINE_ERROR(IsolatedVertex);
GEONET_DEFINE_ERROR(DomainError);

// Serialization.
GEONET_DEFINE_ERROR(VersionError);

#undef GEONET_DEFINE_ERROR

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace geonet
