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

#include <optional>
#include <string>
#include <vector>

#include "steadyent/models.hpp"

namespace steadyent {

/// Largest qubit count for which a dense 4^N x 4^N generator is built.
inline constexpr int kMaxDenseQubits = 6;

/// Matrix-free generator rho -> L rho. Works directly on the 2^N x 2^N
/// operator: sparse commutator, per-site jump terms via local 2x2 updates and
/// the reset via a per-site partial trace. Never touches 4^N-sized data.
class Liouvillian {
 public:
  explicit Liouvillian(const ModelConfig& config);

  int n_qubits() const noexcept { return n_qubits_; }
  Eigen::Index dim() const noexcept { return dim_; }

  Operator operator()(const Operator& rho) const;
  /// out = L rho. `out` must not alias `rho`.
  void apply(const Operator& rho, Operator& out) const;

  /// Diagonal of the superoperator: entry (a, b) is the coefficient of
  /// rho(a, b) in (L rho)(a, b).
  Operator diagonal() const;

 private:
  int n_qubits_;
  Eigen::Index dim_;
  SparseOperator hamiltonian_;
  std::vector<LocalJump> jumps_;
  double reset_rate_;
  std::vector<Eigen::Matrix2cd> chi_;
};

/// L rho for a single operator.
Operator apply(const ModelConfig& config, const Operator& rho);

/// Generator as an explicit matrix acting on column-stacked vec(rho).
class SuperOperator {
 public:
  SuperOperator(int n_qubits, Eigen::MatrixXcd matrix);

  int n_qubits() const noexcept { return n_qubits_; }
  const Eigen::MatrixXcd& matrix() const noexcept { return matrix_; }
  Operator operator()(const Operator& rho) const;

 private:
  int n_qubits_;
  Eigen::MatrixXcd matrix_;
};

/// Sparse 4^N x 4^N generator assembled from Kronecker products,
/// independently of the matrix-free route.
SparseOperator assemble_sparse(const ModelConfig& config);

/// Dense generator; throws CapacityError for n_qubits > kMaxDenseQubits.
SuperOperator assemble_dense(const ModelConfig& config);

struct LindbladCheck {
  bool passed = false;
  double min_choi_eigenvalue = 0.0;
  double dt = 0.0;
  /// "choi" (full propagator) or "local" (per-site generators, N >= 6).
  std::string route;
};

inline constexpr double kChoiTolerance = -1e-8;

/// 1e-3 / max(g, gamma, r, B, C, 1).
double default_check_dt(const ModelConfig& config);

/// Complete-positivity check: the Choi matrix of exp(L dt) must be positive
/// semidefinite to kChoiTolerance. For N >= 6 the check runs per site on the
/// local dissipative generators plus Hermiticity of H, which suffices because
/// the generator is their sum.
LindbladCheck check_lindblad(const ModelConfig& config, std::optional<double> dt = std::nullopt);

}  // namespace steadyent
