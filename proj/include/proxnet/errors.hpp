#pragma once

#include <stdexcept>
#include <string>

namespace proxnet {

// Base class for all toolkit errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input values: bad addresses, bad survey items, bad records.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Arguments outside a valid domain (i == j, p outside [0,1], ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Values outside a configured range (score outside band table, window
// outside the study period).
class RangeError : public Error {
 public:
  using Error::Error;
};

// Unreadable or unwritable files and streams.
class IoError : public Error {
 public:
  using Error::Error;
};

// Bad configuration or scenario files; maps to CLI exit code 2.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace proxnet
