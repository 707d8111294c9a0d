#pragma once

#include <stdexcept>
#include <string>

namespace gyro {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured size limit (group closure, product table, search) was hit.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input: cycle notation, group spec, k spec, JSON.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A construction produced a structure that fails the axioms it must satisfy.
class AxiomFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace gyro
