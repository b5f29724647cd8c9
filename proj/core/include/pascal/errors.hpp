#pragma once

#include <stdexcept>
#include <string>

namespace pascal {

// Every failure the library reports derives from Error. The CLI maps the
// subclasses onto its exit-code table.

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value, word or generating set does not fit the group it is used with.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Malformed group-spec document or serialized artifact.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A configured size cap was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// A ball was queried beyond the radius it was built with.
class InsufficientRadius : public Error {
 public:
  using Error::Error;
};

/// Generating set is not adapted to the product structure a formula needs.
class UnsupportedGeneratingSet : public Error {
 public:
  using Error::Error;
};

/// Convex hull input does not span the ambient space.
class DimensionDeficiency : public Error {
 public:
  using Error::Error;
};

/// Automaton construction failed; the caller should change a parameter.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

class InconsistentConeRadius : public ConstructionError {
 public:
  using ConstructionError::ConstructionError;
};

class DifferenceOverflow : public ConstructionError {
 public:
  using ConstructionError::ConstructionError;
};

/// Word handed to the transfer matrices is not accepted as geodesic.
class NonGeodesicInput : public Error {
 public:
  using Error::Error;
};

}  // namespace pascal
