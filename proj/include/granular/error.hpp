#pragma once

#include <stdexcept>
#include <string>

namespace granular {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text or a call outside the supported size range.
class UsageError : public Error {
 public:
  using Error::Error;
};

class ParseError : public UsageError {
 public:
  using UsageError::UsageError;
};

class OutOfRange : public UsageError {
 public:
  using UsageError::UsageError;
};

/// Well-formed input that violates a semantic rule of the data model.
class SemanticError : public Error {
 public:
  using Error::Error;
};

class UniverseMismatch : public SemanticError {
 public:
  UniverseMismatch() : SemanticError("operands belong to different universes") {}
  explicit UniverseMismatch(const std::string& what) : SemanticError(what) {}
};

class UnknownElement : public SemanticError {
 public:
  using SemanticError::SemanticError;
};

class InvalidUniverse : public SemanticError {
 public:
  using SemanticError::SemanticError;
};

class InvalidCovering : public SemanticError {
 public:
  using SemanticError::SemanticError;
};

class InvalidTolerance : public SemanticError {
 public:
  using SemanticError::SemanticError;
};

class NonTotalTable : public SemanticError {
 public:
  using SemanticError::SemanticError;
};

/// An operator table lacks the axioms an operation needs.
class AxiomPreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace granular
