#pragma once

#include <stdexcept>
#include <string>

namespace kerrbell {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A signal state has weight outside the one-photon-per-arm sector.
class NotInQubitSpace : public Error {
 public:
  using Error::Error;
};

/// An occupation exceeds the configured photon-number bound.
class TruncationOverflow : public Error {
 public:
  using Error::Error;
};

/// Conditioning on a homodyne outcome with (numerically) zero density.
class ZeroDensity : public Error {
 public:
  using Error::Error;
};

class NotABellState : public Error {
 public:
  using Error::Error;
};

class InvalidSpec : public Error {
 public:
  using Error::Error;
};

}  // namespace kerrbell
