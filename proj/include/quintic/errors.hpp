#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace quintic {

/// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-domain user input (n <= 1, composite where a prime is required, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

class NotFifthPowerFree : public InputError {
 public:
  using InputError::InputError;
};

class FactorizationBoundExceeded : public InputError {
 public:
  using InputError::InputError;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// A rational prime whose splitting type in Z[zeta_5] is not handled (p = 4 mod 5).
class UnsupportedPrime : public Error {
 public:
  using Error::Error;
};

/// Residue symbol (a/pi) with pi | a.
class UndefinedSymbol : public Error {
 public:
  using Error::Error;
};

/// Operation not defined for the given prime kind.
class UnsupportedOperation : public Error {
 public:
  using Error::Error;
};

class EngineError : public Error {
 public:
  using Error::Error;
};

class FixtureError : public Error {
 public:
  using Error::Error;
};

/// External CAS adapter could not be run or exited abnormally.
class CasError : public Error {
 public:
  using Error::Error;
};

class CasTimeout : public CasError {
 public:
  CasTimeout(std::uint64_t n, const std::string& what) : CasError(what), n_(n) {}
  std::uint64_t n() const { return n_; }

 private:
  std::uint64_t n_;
};

/// Adapter answered, but not with a well-formed response line.
class CasProtocolError : public CasError {
 public:
  using CasError::CasError;
};

}  // namespace quintic
