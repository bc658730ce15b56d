#pragma once

#include <stdexcept>
#include <string>

namespace etaq {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PrecisionExceeded : Error {
  using Error::Error;
};

struct ResidueMismatch : Error {
  using Error::Error;
};

struct ZeroLeadingCoefficient : Error {
  using Error::Error;
};

struct UnsupportedWeight : Error {
  using Error::Error;
};

struct InvalidPole : Error {
  using Error::Error;
};

struct InvalidContext : Error {
  using Error::Error;
};

struct EnumerationTooLarge : Error {
  using Error::Error;
};

struct DivisibilityFailure : Error {
  using Error::Error;
};

struct IntegralityError : Error {
  using Error::Error;
};

}  // namespace etaq
