// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef VERONESE_ERRORS_HPP
#define VERONESE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace veronese {

/// Base class for all recoverable errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Operands live over different numbers of variables.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Input is outside the mathematical domain of the operation
/// (zero ideal, unit ideal, infeasible parameters, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A variable index is outside 1..n or an index set is malformed.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition was violated (e.g. an ideal that is not
/// squarefree strongly stable was passed to a formula that needs it).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A vector family fails the base-set axioms (unequal moduli, ...).
class InvalidBaseSetError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// The exchange property fails, so the input is not a polymatroid base set.
class NotAPolymatroidError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// The strong exchange property fails.
class NotStrongExchangeError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// An exact enumeration would exceed its configured budget.  Raised instead
/// of silently truncating.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed; indicates a defect, not bad input.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace veronese

#endif  // VERONESE_ERRORS_HPP
