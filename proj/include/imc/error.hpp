#pragma once

#include <stdexcept>
#include <string>

namespace imc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A gamble with the wrong length or a non-finite entry.
class InvalidGamble : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class UnknownState : public Error {
 public:
  using Error::Error;
};

class UnknownGamble : public Error {
 public:
  using Error::Error;
};

/// A credal row that violates one of its structural invariants.
class InvalidRow : public Error {
 public:
  using Error::Error;
};

/// A combinatorial guard tripped (vertex enumeration, strategy enumeration).
class SizeLimit : public Error {
 public:
  using Error::Error;
};

class UnsupportedRow : public Error {
 public:
  using Error::Error;
};

class NotMaximalClass : public Error {
 public:
  using Error::Error;
};

/// Model document could not be parsed; the message carries the line or field.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A runtime self-check on a theoretical property failed.
class InternalCheckFailed : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace imc
