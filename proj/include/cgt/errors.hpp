#pragma once

#include <stdexcept>
#include <string>

namespace cgt {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed cycle notation or group spec text.
class ParseError : public Error {
public:
  using Error::Error;
};

/// Precondition violation on otherwise well-formed input
/// (degree mismatch, point out of range, non-prime p, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

/// A configured size cap would be exceeded.
class CapExceededError : public Error {
public:
  using Error::Error;
};

/// Sylow validation failed: the group is not nilpotent.
class NotNilpotentError : public Error {
public:
  using Error::Error;
};

/// Operation defined only for abelian groups.
class NonAbelianInputError : public Error {
public:
  using Error::Error;
};

/// Some Sylow subgroup is larger than p^k, so the classification
/// criterion does not apply.
class HypothesisNotMetError : public Error {
public:
  using Error::Error;
};

} // namespace cgt
