#pragma once

#include <stdexcept>
#include <string>

namespace lyubgraph {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input data (bad JSON, unknown variable, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside the range where it is defined, e.g. a
/// threshold out of range or a graph query on a ring of dimension < 2.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive search was asked to run beyond its configured size cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace lyubgraph
