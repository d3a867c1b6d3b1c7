#pragma once

#include <stdexcept>
#include <string>

namespace qcover {

// Every failure the library reports is a domain error: the inputs were well
// formed but the requested computation has no answer.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidPrime : public DomainError {
 public:
  explicit InvalidPrime(long p)
      : DomainError("not an odd prime: " + std::to_string(p)) {}
};

class ModulusMismatch : public DomainError {
 public:
  ModulusMismatch(int a, int b)
      : DomainError("cyclotomic modulus mismatch: " + std::to_string(a) +
                    " vs " + std::to_string(b)) {}
};

class NotDivisible : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotPPowerInvertible : public DomainError {
 public:
  using DomainError::DomainError;
};

class UnsupportedPrime : public DomainError {
 public:
  UnsupportedPrime(long p, const std::string& what)
      : DomainError(what + " is not available for p = " + std::to_string(p)) {}
};

class InternalInconsistency : public DomainError {
 public:
  using DomainError::DomainError;
};

class TooLarge : public DomainError {
 public:
  using DomainError::DomainError;
};

class ParseError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace qcover
