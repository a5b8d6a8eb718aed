#pragma once

#include <stdexcept>
#include <string>

namespace walklab {

// Base class for all typed errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Usage-level problems: malformed input, out-of-range indices.
struct UsageError : Error {
  using Error::Error;
};

// A law derived only for the fair walk received p != 1/2.
struct BiasedUnsupported : Error {
  using Error::Error;
};

struct NotUnbiased : Error {
  using Error::Error;
};

struct NotBiased : Error {
  using Error::Error;
};

struct DegenerateP : Error {
  using Error::Error;
};

struct StartUnsupported : Error {
  using Error::Error;
};

struct RhoOne : Error {
  using Error::Error;
};

struct PartsMismatch : UsageError {
  using UsageError::UsageError;
};

struct IndexRange : UsageError {
  using UsageError::UsageError;
};

struct DomainRange : UsageError {
  using UsageError::UsageError;
};

struct TooLarge : UsageError {
  using UsageError::UsageError;
};

struct Unreachable : UsageError {
  using UsageError::UsageError;
};

struct UnsupportedDimension : UsageError {
  using UsageError::UsageError;
};

}  // namespace walklab
