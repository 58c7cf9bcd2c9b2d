// Copyright 2026 The Ramancat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RAMANCAT_ERRORS_HPP
#define RAMANCAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ramancat {

// Invalid inputs or configuration. The CLI maps these to exit code 2.
class ValidationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Numerical failures: truncation leakage, lost convergence, singular bases.
// The CLI maps these to exit code 3.
class NumericalError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class DimensionError : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

// Zero-norm state handed to an operation that needs a direction.
class DegenerateStateError : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

// Three-level state with non-negligible |f> population where a two-level
// joint state is required.
class InvalidSubspaceError : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

class TruncationError : public NumericalError {
  public:
    TruncationError(const std::string& msg, double leakage)
        : NumericalError(msg), leakage(leakage) {}
    double leakage;
};

class ConvergenceError : public NumericalError {
  public:
    using NumericalError::NumericalError;
};

// Requested measurement outcome has (numerically) zero probability.
class ImpossibleOutcomeError : public NumericalError {
  public:
    using NumericalError::NumericalError;
};

class IllConditionedBasisError : public NumericalError {
  public:
    IllConditionedBasisError(const std::string& msg, double condition_number)
        : NumericalError(msg), condition_number(condition_number) {}
    double condition_number;
};

}  // namespace ramancat

#endif  // RAMANCAT_ERRORS_HPP
