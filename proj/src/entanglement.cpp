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

#include "steadyent/entanglement.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numeric>

namespace steadyent {

double negativity(const DensityMatrix& rho, const Bipartition& split) {
  const Operator pt = hermitian_part(partial_transpose(rho, split));
  return std::max(0.0, (trace_norm_hermitian(pt) - 1.0) / 2.0);
}

double negativity_from_spectrum(const DensityMatrix& rho, const Bipartition& split) {
  const Operator pt = hermitian_part(partial_transpose(rho, split));
  Eigen::SelfAdjointEigenSolver<Operator> es(pt, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw SolverError("negativity: eigensolver failed");
  double negative = 0.0;
  for (double v : es.eigenvalues()) {
    if (v < 0.0) negative += v;
  }
  return std::max(0.0, -negative);
}

std::vector<Bipartition> enumerate_bipartitions(int n_qubits) {
  if (n_qubits < 2) throw ArgumentError("enumerate_bipartitions: need at least two qubits");
  if (n_qubits > kMaxQubits) throw ArgumentError("enumerate_bipartitions: too many qubits");
  std::vector<Bipartition> out;
  // subsets of qubits 1..N-1 (qubit N always on the complement side)
  const std::uint32_t count = std::uint32_t{1} << (n_qubits - 1);
  for (std::uint32_t subset = 1; subset < count; ++subset) {
    std::vector<int> members;
    for (int q = 1; q < n_qubits; ++q) {
      if (subset & (std::uint32_t{1} << (q - 1))) members.push_back(q);
    }
    out.emplace_back(n_qubits, std::move(members));
  }
  return out;
}

double average_negativity(const DensityMatrix& rho) {
  const auto splits = enumerate_bipartitions(rho.n_qubits());
  double sum = 0.0;
  for (const auto& split : splits) sum += negativity(rho, split);
  return sum / static_cast<double>(splits.size());
}

DensityMatrix reduced_pair(const DensityMatrix& rho, int i, int j) {
  if (i == j) throw ArgumentError("reduced_pair: qubits must differ");
  const int keep[2] = {std::min(i, j), std::max(i, j)};
  return partial_trace(rho, std::span<const int>(keep));
}

std::vector<double> MixtureSpec::weights() const {
  if (n_min < 0 || n_max < n_min) throw ArgumentError("MixtureSpec: empty particle-number window");
  if (!(lambda > 0.0)) throw ArgumentError("MixtureSpec: lambda must be positive");
  std::vector<double> w;
  for (int n = n_min; n <= n_max; ++n) {
    w.push_back(std::exp(n * std::log(lambda) - std::lgamma(n + 1.0)));
  }
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  for (double& x : w) x /= total;
  return w;
}

DensityMatrix poisson_mixture(const std::map<int, DensityMatrix>& states, const MixtureSpec& spec) {
  const auto w = spec.weights();
  Operator mix;
  for (int n = spec.n_min; n <= spec.n_max; ++n) {
    const auto it = states.find(n);
    if (it == states.end()) {
      throw ArgumentError("poisson_mixture: no state for N = " + std::to_string(n));
    }
    const Operator& rho = it->second.matrix();
    if (mix.size() == 0) {
      mix = Operator::Zero(rho.rows(), rho.cols());
    } else if (rho.rows() != mix.rows()) {
      throw ArgumentError("poisson_mixture: states have different dimensions");
    }
    mix += w[static_cast<std::size_t>(n - spec.n_min)] * rho;
  }
  return DensityMatrix(std::move(mix));
}

}  // namespace steadyent
