#pragma once

#include <stdexcept>
#include <string>

namespace hoops {

/// Base of every error thrown by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: unparsable files, inconsistent dimensions, mismatched basepoints.
class InputError : public Error
{
public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error
{
public:
  using Error::Error;
};

/// An exhaustive computation would exceed its configured budget.
class BudgetError : public PreconditionError
{
public:
  using PreconditionError::PreconditionError;
};

/// Floating point computation produced NaN/Inf.
class NumericalError : public Error
{
public:
  using Error::Error;
};

} // namespace hoops
