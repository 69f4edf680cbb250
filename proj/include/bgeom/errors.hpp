#pragma once

#include <stdexcept>
#include <string>

namespace bgeom {

// Input outside the domain of a formula or operation (CLI exit code 1).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed textual input (CLI exit code 2).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UndefinedProjection : public DomainError {
 public:
  using DomainError::DomainError;
};

class DegeneratePair : public DomainError {
 public:
  using DomainError::DomainError;
};

class InvalidMove : public DomainError {
 public:
  using DomainError::DomainError;
};

class UnsupportedSurface : public DomainError {
 public:
  using DomainError::DomainError;
};

class StructuralError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace bgeom
