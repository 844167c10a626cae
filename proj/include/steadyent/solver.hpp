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
#include <vector>

#include "steadyent/liouvillian.hpp"

namespace steadyent {

struct SteadyStateResult {
  DensityMatrix state;
  double residual = 0.0;  ///< ||L rho||_F
  bool unique = true;
  std::optional<double> spectral_gap;
  /// Propagation time used by the evolve route.
  double time = 0.0;
};

/// Error control for the adaptive Dormand-Prince 5(4) integrator.
struct IntegratorOptions {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  /// Step cap as a multiple of 1 / (spectral radius estimate).
  double max_step_factor = 1.0;
};

/// Null vector of the dense generator (N <= kMaxDenseQubits). When the null
/// space has dimension > 1 the result is the projection of the maximally
/// mixed state onto it, flagged `unique = false`.
SteadyStateResult steady_state_dense(const ModelConfig& config, double tol = 1e-10);

/// Cross-check route: LU solve of the generator with one row replaced by the
/// trace condition. Throws SolverError when that system is singular.
SteadyStateResult steady_state_lu(const ModelConfig& config, double tol = 1e-10);

/// Smallest residual ||L rho||_F that roundoff allows: 100 eps times an
/// estimate of the generator's spectral radius. Every solver raises its
/// tolerance to at least this value, which only matters for rates >> 1e4.
double residual_floor(const ModelConfig& config);

/// 100 / (smallest positive relaxation rate).
double default_t_max(const ModelConfig& config);

/// Matrix-free long-time propagation until ||L rho||_F <= tol. Throws
/// TimeoutError (with the last residual) when t_max is reached first.
SteadyStateResult steady_state_evolve(const ModelConfig& config, const DensityMatrix& rho0,
                                      double tol = 1e-10,
                                      std::optional<double> t_max = std::nullopt,
                                      const IntegratorOptions& options = {});

struct KrylovOptions {
  int restart = 300;
  int max_iterations = 20000;
  int refinements = 8;
};

/// Matrix-free steady state: Jacobi-preconditioned restarted GMRES on the
/// generator with a rank-one trace term added. Requires a unique steady
/// state; throws SolverError when the residual cannot be brought below tol.
SteadyStateResult steady_state_krylov(const ModelConfig& config, double tol = 1e-10,
                                      const KrylovOptions& options = {});

/// Dense null space for N <= dense_limit, otherwise the matrix-free Krylov
/// solve, falling back to long-time propagation from the product of reset
/// states (maximally mixed when r = 0) if GMRES stalls.
SteadyStateResult steady_state(const ModelConfig& config, double tol = 1e-10,
                               int dense_limit = 4);

/// rho(t) = exp(L t) rho0.
DensityMatrix propagate(const ModelConfig& config, const DensityMatrix& rho0, double t,
                        const IntegratorOptions& options = {});

/// All 4^N eigenvalues of the dense generator, unsorted.
std::vector<Complex> spectrum(const ModelConfig& config);

/// Sorted by real part descending, then imaginary part descending; real parts
/// within `tol` of their neighbour count as equal.
void sort_spectrum(std::vector<Complex>& eigenvalues, double tol = 1e-9);

}  // namespace steadyent
