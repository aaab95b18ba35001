#pragma once

#include <stdexcept>
#include <string>

namespace gradkit {

// Malformed or out-of-range input data (files, edge lists). CLI exit code 2.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A violated algorithmic precondition: size over an oracle limit, an invalid
// ball family, a non-centered coloring, ... CLI exit code 1.
class DomainError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class OracleLimitError : public DomainError {
public:
  using DomainError::DomainError;
};

class InvalidFamilyError : public DomainError {
public:
  using DomainError::DomainError;
};

class NotCenteredError : public DomainError {
public:
  using DomainError::DomainError;
};

class InvalidDecompositionError : public DomainError {
public:
  using DomainError::DomainError;
};

} // namespace gradkit
