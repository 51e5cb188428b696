#pragma once

#include <stdexcept>
#include <string>

namespace tcla {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A functional was asked for a generator it does not assign.
class MissingAssignment : public Error {
 public:
  using Error::Error;
};

/// A weight outside the positive cone, or two partitions of different weight.
class WeightError : public Error {
 public:
  using Error::Error;
};

/// A Lie algebra presentation failed one of its axioms.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace tcla
