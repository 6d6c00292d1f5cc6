#pragma once

#include <stdexcept>
#include <string>

#include "gmm/arith.hpp"

namespace gmm {

/// Invalid mathematical input: zero where a unit is needed, singular
/// matrices, non-morphisms, non-integral data.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParseError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A computation gave up within its configured budget. Never carries a
/// partial answer.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnfactoredCofactorError : public BudgetError {
 public:
  UnfactoredCofactorError(Integer cofactor)
      : BudgetError("factorization budget exceeded; unfactored cofactor " +
                    cofactor.str()),
        cofactor_(std::move(cofactor)) {}

  const Integer& cofactor() const { return cofactor_; }

 private:
  Integer cofactor_;
};

class DegenerateSpecializationError : public BudgetError {
 public:
  using BudgetError::BudgetError;
};

}  // namespace gmm
