// Copyright 2026 The steadyent Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace steadyent {

// Bad argument to an otherwise well-defined operation (wrong site, empty list).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A model or config violates one of its invariants. `field()` is a dotted
// path such as "noise.C" or "reset.chi[2]".
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

// Problem too large for the requested (dense) route.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parameters outside the domain of a closed-form expression.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Eigensolver / null-space / integrator failures.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IntegrationError : public SolverError {
 public:
  using SolverError::SolverError;
};

// Long-time propagation hit t_max before the residual dropped below tolerance.
class TimeoutError : public SolverError {
 public:
  TimeoutError(const std::string& message, double last_residual)
      : SolverError(message), last_residual_(last_residual) {}

  double last_residual() const noexcept { return last_residual_; }

 private:
  double last_residual_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace steadyent
