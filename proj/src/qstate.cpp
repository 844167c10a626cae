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

#include "steadyent/qstate.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <sstream>

namespace steadyent {

double trace_norm_hermitian(const Operator& h) {
  Eigen::SelfAdjointEigenSolver<Operator> es(h, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw SolverError("trace norm: eigensolver failed");
  return es.eigenvalues().cwiseAbs().sum();
}

double trace_distance(const Operator& a, const Operator& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ArgumentError("trace_distance: dimension mismatch");
  }
  return 0.5 * trace_norm_hermitian(hermitian_part(a - b));
}

DensityMatrix::DensityMatrix(Operator op, Unchecked) : op_(std::move(op)) {
  if (op_.rows() != op_.cols()) throw ArgumentError("density matrix must be square");
  n_qubits_ = qubit_count(op_.rows());
}

DensityMatrix::DensityMatrix(Operator op, const StateTolerance& tol)
    : DensityMatrix(std::move(op), Unchecked{}) {
  check(tol);
}

DensityMatrix DensityMatrix::assume_valid(Operator op) {
  return DensityMatrix(std::move(op), Unchecked{});
}

DensityMatrix DensityMatrix::from_pure(const Eigen::VectorXcd& psi) {
  const double norm = psi.norm();
  if (norm == 0.0) throw ArgumentError("from_pure: zero vector");
  const Eigen::VectorXcd u = psi / norm;
  return DensityMatrix(u * u.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(int n_qubits) {
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  return DensityMatrix(Operator::Identity(dim, dim) / double(dim));
}

DensityMatrix DensityMatrix::product(std::span<const DensityMatrix> factors) {
  std::vector<Operator> ops;
  ops.reserve(factors.size());
  for (const auto& f : factors) ops.push_back(f.matrix());
  return DensityMatrix(tensor(ops));
}

double DensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Operator> es(hermitian_part(op_), Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

void DensityMatrix::check(const StateTolerance& tol) const {
  const double herm = hermiticity_defect(op_);
  if (herm > tol.hermiticity) {
    std::ostringstream msg;
    msg << "not Hermitian (max deviation " << herm << ")";
    throw ValidationError("rho", msg.str());
  }
  const Complex tr = op_.trace();
  if (std::abs(tr - Complex(1.0)) > tol.trace) {
    std::ostringstream msg;
    msg << "trace " << tr << " differs from 1";
    throw ValidationError("rho", msg.str());
  }
  const double lo = min_eigenvalue();
  if (lo < tol.min_eigenvalue) {
    std::ostringstream msg;
    msg << "negative eigenvalue " << lo;
    throw ValidationError("rho", msg.str());
  }
}

Bipartition::Bipartition(int n_qubits, std::vector<int> members_of_a) : n_qubits_(n_qubits) {
  if (n_qubits < 2) throw ArgumentError("bipartition needs at least two qubits");
  std::uint32_t mask = sites_mask(members_of_a, n_qubits);
  const std::uint32_t all = (std::uint32_t{1} << n_qubits) - 1;
  if (mask == 0 || mask == all) {
    throw ArgumentError("bipartition side must be a nonempty proper subset");
  }
  if (static_cast<std::size_t>(std::popcount(mask)) != members_of_a.size()) {
    throw ArgumentError("bipartition: duplicate qubit index");
  }
  // qubit N is the least significant bit
  if (mask & 1u) mask = all & ~mask;
  mask_ = mask;
  for (int q = 1; q <= n_qubits; ++q) {
    if (mask_ & site_mask(q, n_qubits)) members_.push_back(q);
  }
}

std::vector<int> Bipartition::complement() const {
  std::vector<int> out;
  for (int q = 1; q <= n_qubits_; ++q) {
    if (!(mask_ & site_mask(q, n_qubits_))) out.push_back(q);
  }
  return out;
}

Operator partial_transpose(const DensityMatrix& rho, const Bipartition& split) {
  if (split.n_qubits() != rho.n_qubits()) {
    throw ArgumentError("partial_transpose: bipartition has " + std::to_string(split.n_qubits()) +
                        " qubits, state has " + std::to_string(rho.n_qubits()));
  }
  return partial_transpose_mask(rho.matrix(), split.mask());
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep) {
  return DensityMatrix::assume_valid(partial_trace(rho.matrix(), keep));
}

}  // namespace steadyent
