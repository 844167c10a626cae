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

#include <map>
#include <vector>

#include "steadyent/qstate.hpp"

namespace steadyent {

/// (||rho^{T_A}||_1 - 1) / 2.
double negativity(const DensityMatrix& rho, const Bipartition& split);

/// Same quantity from the negative eigenvalues of rho^{T_A}:
/// max(0, -sum of negative eigenvalues).
double negativity_from_spectrum(const DensityMatrix& rho, const Bipartition& split);

/// Every unordered split of n qubits (2^(n-1) - 1 of them), canonical form.
std::vector<Bipartition> enumerate_bipartitions(int n_qubits);

/// Mean negativity over enumerate_bipartitions(rho.n_qubits()).
double average_negativity(const DensityMatrix& rho);

/// Reduced state of qubits i and j (ordered i < j in the result basis).
DensityMatrix reduced_pair(const DensityMatrix& rho, int i, int j);

/// Truncated Poisson distribution over particle numbers n_min..n_max.
struct MixtureSpec {
  int n_min = 2;
  int n_max = 6;
  double lambda = 4.0;

  /// p_N proportional to lambda^N / N!, renormalized on the window; index 0
  /// corresponds to n_min.
  std::vector<double> weights() const;
};

/// sum_N p_N rho^(N) over the mixture window.
DensityMatrix poisson_mixture(const std::map<int, DensityMatrix>& states, const MixtureSpec& spec);

}  // namespace steadyent
