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

// Model descriptions for the reset-augmented master equation
//
//   d rho/dt = -i[H, rho] + L_noise rho + r sum_i (chi_i (x)_i tr_i rho - rho).
//
// Everything here is plain data plus constructors; the generator itself lives
// in liouvillian.hpp.

#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "steadyent/qstate.hpp"

namespace steadyent {

using SparseOperator = Eigen::SparseMatrix<Complex>;

/// coefficient * (tensor product of I/X/Y/Z), one letter per qubit, qubit 1 first.
struct PauliTerm {
  double coefficient = 0.0;
  std::string word;
};

/// H = g * sum_k c_k P_k.
struct HamiltonianSpec {
  int n_qubits = 2;
  double g = 0.0;
  std::vector<PauliTerm> terms;

  Operator matrix() const;
  SparseOperator sparse() const;
};

/// Matrix of a single Pauli word (no coefficient).
SparseOperator pauli_word(std::string_view word);

std::vector<std::pair<int, int>> all_pairs(int n_qubits);

/// g * sum_{(i,j)} Z_i Z_j.
HamiltonianSpec ising(double g, const std::vector<std::pair<int, int>>& pairs, int n_qubits);
/// g * (XX + YY + ZZ) on two qubits.
HamiltonianSpec heisenberg(double g);
/// g * (0.7 XX + 0.3 YY + ZZ + 0.5 (X1 + X2)).
HamiltonianSpec xyz_field(double g);
/// g * X1 X2.
HamiltonianSpec xx_coupling(double g);

/// General single-qubit noise: inversion decay rate B, polarization decay
/// rate C, and asymptotic excited population s = <(1 + sigma_z)/2>.
struct NoiseParams {
  double B = 0.0;
  double C = 0.0;
  double s = 0.5;
};

/// Pure dephasing, (gamma/2) (Z rho Z - rho) per qubit. Same generator as
/// NoiseParams{0, gamma, any s}.
struct DephasingParams {
  double gamma = 0.0;
};

using Noise = std::variant<DephasingParams, NoiseParams>;

/// rate * (L rho L^dag - {L^dag L, rho}/2) on every qubit.
struct LocalJump {
  double rate = 0.0;
  Eigen::Matrix2cd op;
};

/// Per-site jump terms equivalent to `noise`. Rates are taken as given, so an
/// invalid (negative) parameter yields a negative-rate term.
std::vector<LocalJump> local_jumps(const Noise& noise);

/// Reset at rate r to the per-site single-qubit states chi[i].
struct ResetSpec {
  double r = 0.0;
  std::vector<Eigen::Matrix2cd> chi;

  static ResetSpec uniform(double r, const Eigen::Matrix2cd& chi, int n_qubits);
};

/// Single-qubit states. `mix` blends in the orthogonal state:
/// (1 - mix) |psi><psi| + mix |psi_perp><psi_perp|.
/// Names: zero, one, plus, minus, plus_i, minus_i.
Eigen::Matrix2cd named_state(std::string_view name, double mix = 0.0);
Eigen::Matrix2cd bloch_state(const Eigen::Vector3d& bloch);
Eigen::Vector3d bloch_vector(const Eigen::Matrix2cd& chi);

struct ModelConfig {
  int n_qubits = 2;
  HamiltonianSpec hamiltonian;
  Noise noise = DephasingParams{};
  ResetSpec reset;
};

/// Returns `config` when every invariant holds; otherwise throws
/// ValidationError naming the offending field.
ModelConfig validate(ModelConfig config);

/// Ising coupling on (1,2), dephasing gamma, reset to |+> at rate r.
ModelConfig ising_dephasing_2q(double g, double gamma, double r);
/// All-pairs Ising on n qubits with dephasing and |+> reset.
ModelConfig symmetric_ising(int n_qubits, double g, double gamma, double r);
/// XYZ + transverse field with general noise C = gamma_ref / 10, B = 2C.
ModelConfig xyz_field_preset(double g, double r, double s, double gamma_ref = 1.0);
/// r = 0 decay-channel model: H = g X1 X2, B = 2 gamma, C = gamma.
ModelConfig decay_channel_preset(double g, double s, double gamma = 1.0);

/// Rate that plays the role of gamma in dimensionless coordinates: gamma for
/// dephasing noise, 1 for general noise.
double reference_rate(const ModelConfig& config);
/// Largest rate-like parameter (for time-step scaling).
double max_rate(const ModelConfig& config);
/// Smallest positive relaxation rate among r and the noise rates, or 0 when
/// nothing relaxes.
double min_positive_rate(const ModelConfig& config);

/// Copy of `config` with g and r set in units of reference_rate(config).
ModelConfig with_reduced_rates(const ModelConfig& config, double g_reduced, double r_reduced);

}  // namespace steadyent
