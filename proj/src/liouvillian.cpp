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

#include "steadyent/liouvillian.hpp"

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <cmath>
#include <limits>

namespace steadyent {
namespace {

constexpr Complex kI{0.0, 1.0};

// out += coeff * A_site * rho
void add_left_local(Operator& out, Complex coeff, const Eigen::Matrix2cd& a, Eigen::Index mask,
                    const Operator& rho) {
  const Eigen::Index dim = rho.rows();
  const Eigen::Matrix2cd ca = coeff * a;
  for (Eigen::Index col = 0; col < dim; ++col) {
    for (Eigen::Index r0 = 0; r0 < dim; ++r0) {
      if (r0 & mask) continue;
      const Eigen::Index r1 = r0 | mask;
      const Complex x0 = rho(r0, col);
      const Complex x1 = rho(r1, col);
      out(r0, col) += ca(0, 0) * x0 + ca(0, 1) * x1;
      out(r1, col) += ca(1, 0) * x0 + ca(1, 1) * x1;
    }
  }
}

// out += coeff * rho * A_site
void add_right_local(Operator& out, Complex coeff, const Operator& rho,
                     const Eigen::Matrix2cd& a, Eigen::Index mask) {
  const Eigen::Index dim = rho.rows();
  const Eigen::Matrix2cd ca = coeff * a;
  for (Eigen::Index c0 = 0; c0 < dim; ++c0) {
    if (c0 & mask) continue;
    const Eigen::Index c1 = c0 | mask;
    out.col(c0) += rho.col(c0) * ca(0, 0) + rho.col(c1) * ca(1, 0);
    out.col(c1) += rho.col(c0) * ca(0, 1) + rho.col(c1) * ca(1, 1);
  }
}

SparseOperator sparse_identity(Eigen::Index dim) {
  SparseOperator id(dim, dim);
  id.setIdentity();
  return id;
}

SparseOperator embed_sparse(const Eigen::Matrix2cd& op, int site, int n) {
  return embed(op, site, n).sparseView();
}

Eigen::Matrix2cd ket_bra(int row, int col) {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  m(row, col) = 1.0;
  return m;
}

// exp(dt L) X by Taylor series; dt * ||L|| is small by construction.
Operator short_time_propagate(const Liouvillian& gen, const Operator& x, double dt) {
  Operator sum = x;
  Operator term = x;
  Operator next(x.rows(), x.cols());
  const double scale = std::max(x.norm(), 1e-300);
  for (int k = 1; k <= 60; ++k) {
    gen.apply(term, next);
    term = next * (dt / k);
    sum += term;
    if (term.norm() <= 1e-18 * scale) break;
  }
  return sum;
}

double min_choi_eigenvalue(const ModelConfig& config, double dt) {
  const Liouvillian gen(config);
  const Eigen::Index d = gen.dim();
  Operator choi = Operator::Zero(d * d, d * d);
  Operator basis = Operator::Zero(d, d);
  for (Eigen::Index k = 0; k < d; ++k) {
    for (Eigen::Index l = 0; l < d; ++l) {
      basis(k, l) = 1.0;
      choi.block(k * d, l * d, d, d) = short_time_propagate(gen, basis, dt);
      basis(k, l) = 0.0;
    }
  }
  Eigen::SelfAdjointEigenSolver<Operator> es(hermitian_part(choi), Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw SolverError("check_lindblad: eigensolver failed");
  return es.eigenvalues().minCoeff();
}

}  // namespace

Liouvillian::Liouvillian(const ModelConfig& config)
    : n_qubits_(config.n_qubits),
      dim_(Eigen::Index{1} << config.n_qubits),
      hamiltonian_(config.hamiltonian.sparse()),
      jumps_(local_jumps(config.noise)),
      reset_rate_(config.reset.r),
      chi_(config.reset.chi) {
  if (config.n_qubits < 1 || config.n_qubits > kMaxQubits) {
    throw ArgumentError("Liouvillian: qubit count must be 1.." + std::to_string(kMaxQubits));
  }
  if (hamiltonian_.rows() != dim_) {
    throw ArgumentError("Liouvillian: Hamiltonian dimension does not match qubit count");
  }
  if (reset_rate_ != 0.0 && chi_.size() != static_cast<std::size_t>(n_qubits_)) {
    throw ArgumentError("Liouvillian: need one reset state per qubit");
  }
}

Operator Liouvillian::operator()(const Operator& rho) const {
  Operator out(dim_, dim_);
  apply(rho, out);
  return out;
}

void Liouvillian::apply(const Operator& rho, Operator& out) const {
  if (rho.rows() != dim_ || rho.cols() != dim_) {
    throw ArgumentError("Liouvillian: operator dimension " + std::to_string(rho.rows()) +
                        " does not match " + std::to_string(dim_));
  }
  out.resize(dim_, dim_);
  out.setZero();
  if (hamiltonian_.nonZeros() > 0) {
    out.noalias() += -kI * (hamiltonian_ * rho);
    out.noalias() += kI * (rho * hamiltonian_);
  }

  for (int site = 1; site <= n_qubits_; ++site) {
    const auto mask = static_cast<Eigen::Index>(site_mask(site, n_qubits_));
    for (const auto& jump : jumps_) {
      const Eigen::Matrix2cd l = jump.op;
      const Eigen::Matrix2cd ldag_l = l.adjoint() * l;
      Operator l_rho = Operator::Zero(dim_, dim_);
      add_left_local(l_rho, 1.0, l, mask, rho);
      add_right_local(out, jump.rate, l_rho, l.adjoint(), mask);
      add_left_local(out, -0.5 * jump.rate, ldag_l, mask, rho);
      add_right_local(out, -0.5 * jump.rate, rho, ldag_l, mask);
    }

    if (reset_rate_ != 0.0) {
      const Eigen::Matrix2cd& chi = chi_[static_cast<std::size_t>(site - 1)];
      for (Eigen::Index b = 0; b < dim_; ++b) {
        const int bb = (b & mask) ? 1 : 0;
        const Eigen::Index b0 = b & ~mask;
        for (Eigen::Index a = 0; a < dim_; ++a) {
          const int ab = (a & mask) ? 1 : 0;
          const Eigen::Index a0 = a & ~mask;
          const Complex traced = rho(a0, b0) + rho(a0 | mask, b0 | mask);
          out(a, b) += reset_rate_ * (chi(ab, bb) * traced - rho(a, b));
        }
      }
    }
  }
}

Operator Liouvillian::diagonal() const {
  Operator diag(dim_, dim_);
  for (Eigen::Index b = 0; b < dim_; ++b) {
    for (Eigen::Index a = 0; a < dim_; ++a) {
      diag(a, b) = -kI * (hamiltonian_.coeff(a, a) - hamiltonian_.coeff(b, b));
    }
  }
  for (int site = 1; site <= n_qubits_; ++site) {
    const auto mask = static_cast<Eigen::Index>(site_mask(site, n_qubits_));
    for (Eigen::Index b = 0; b < dim_; ++b) {
      const int bb = (b & mask) ? 1 : 0;
      for (Eigen::Index a = 0; a < dim_; ++a) {
        const int ab = (a & mask) ? 1 : 0;
        Complex v = 0.0;
        for (const auto& jump : jumps_) {
          const Eigen::Matrix2cd m = jump.op.adjoint() * jump.op;
          v += jump.rate * (jump.op(ab, ab) * std::conj(jump.op(bb, bb)) - 0.5 * m(ab, ab) -
                            0.5 * m(bb, bb));
        }
        if (reset_rate_ != 0.0) {
          const Complex keep = (ab == bb) ? chi_[static_cast<std::size_t>(site - 1)](ab, bb) : 0.0;
          v += reset_rate_ * (keep - 1.0);
        }
        diag(a, b) += v;
      }
    }
  }
  return diag;
}

Operator apply(const ModelConfig& config, const Operator& rho) { return Liouvillian(config)(rho); }

SuperOperator::SuperOperator(int n_qubits, Eigen::MatrixXcd matrix)
    : n_qubits_(n_qubits), matrix_(std::move(matrix)) {
  const Eigen::Index d2 = Eigen::Index{1} << (2 * n_qubits);
  if (matrix_.rows() != d2 || matrix_.cols() != d2) {
    throw ArgumentError("SuperOperator: matrix must be 4^N x 4^N");
  }
}

Operator SuperOperator::operator()(const Operator& rho) const {
  return devectorize(matrix_ * vectorize(rho));
}

SparseOperator assemble_sparse(const ModelConfig& config) {
  const int n = config.n_qubits;
  if (n < 1 || n > kMaxQubits) throw ArgumentError("assemble_sparse: bad qubit count");
  const Eigen::Index d = Eigen::Index{1} << n;
  const SparseOperator id = sparse_identity(d);
  const SparseOperator h = config.hamiltonian.sparse();
  if (h.rows() != d) throw ArgumentError("assemble_sparse: Hamiltonian dimension mismatch");

  // vec(A X B) = (B^T (x) A) vec(X)
  SparseOperator gen = SparseOperator(Eigen::kroneckerProduct(id, h)) * (-kI);
  gen += SparseOperator(Eigen::kroneckerProduct(SparseOperator(h.transpose()), id)) * kI;

  const auto jumps = local_jumps(config.noise);
  for (int site = 1; site <= n; ++site) {
    for (const auto& jump : jumps) {
      const SparseOperator l = embed_sparse(jump.op, site, n);
      const SparseOperator ldag_l = l.adjoint() * l;
      gen += jump.rate * SparseOperator(Eigen::kroneckerProduct(SparseOperator(l.conjugate()), l));
      gen -= (0.5 * jump.rate) * SparseOperator(Eigen::kroneckerProduct(id, ldag_l));
      gen -= (0.5 * jump.rate) *
             SparseOperator(Eigen::kroneckerProduct(SparseOperator(ldag_l.transpose()), id));
    }
  }

  // chi (x)_i tr_i rho = sum_{a,b,k} chi_ab |a><k|_i rho |k><b|_i
  const double r = config.reset.r;
  if (r != 0.0) {
    if (config.reset.chi.size() != static_cast<std::size_t>(n)) {
      throw ArgumentError("assemble_sparse: need one reset state per qubit");
    }
    for (int site = 1; site <= n; ++site) {
      const auto& chi = config.reset.chi[static_cast<std::size_t>(site - 1)];
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          if (chi(a, b) == Complex(0.0)) continue;
          for (int k = 0; k < 2; ++k) {
            const SparseOperator left = embed_sparse(ket_bra(a, k), site, n);
            const SparseOperator right = embed_sparse(ket_bra(k, b), site, n);
            gen += (r * chi(a, b)) *
                   SparseOperator(Eigen::kroneckerProduct(SparseOperator(right.transpose()), left));
          }
        }
      }
    }
    gen -= (r * n) * sparse_identity(d * d);
  }
  gen.prune(Complex(0.0));
  return gen;
}

SuperOperator assemble_dense(const ModelConfig& config) {
  if (config.n_qubits > kMaxDenseQubits) {
    throw CapacityError("dense Liouvillian limited to " + std::to_string(kMaxDenseQubits) +
                        " qubits; use the matrix-free solver for " +
                        std::to_string(config.n_qubits));
  }
  return SuperOperator(config.n_qubits, Eigen::MatrixXcd(assemble_sparse(config)));
}

double default_check_dt(const ModelConfig& config) {
  return 1e-3 / std::max(max_rate(config), 1.0);
}

LindbladCheck check_lindblad(const ModelConfig& config, std::optional<double> dt) {
  LindbladCheck result;
  result.dt = dt.value_or(default_check_dt(config));
  if (!(result.dt > 0.0)) throw ArgumentError("check_lindblad: dt must be positive");

  if (config.n_qubits <= 5) {
    result.route = "choi";
    result.min_choi_eigenvalue = min_choi_eigenvalue(config, result.dt);
    result.passed = result.min_choi_eigenvalue >= kChoiTolerance;
    return result;
  }

  result.route = "local";
  double worst = std::numeric_limits<double>::infinity();
  for (int site = 1; site <= config.n_qubits; ++site) {
    ModelConfig local;
    local.n_qubits = 1;
    local.hamiltonian = HamiltonianSpec{1, 0.0, {}};
    local.noise = config.noise;
    local.reset.r = config.reset.r;
    if (config.reset.r != 0.0) {
      local.reset.chi = {config.reset.chi.at(static_cast<std::size_t>(site - 1))};
    }
    worst = std::min(worst, min_choi_eigenvalue(local, result.dt));
  }
  result.min_choi_eigenvalue = worst;
  const bool hermitian = hermiticity_defect(Operator(config.hamiltonian.sparse())) <= 1e-12;
  result.passed = hermitian && worst >= kChoiTolerance;
  return result;
}

}  // namespace steadyent
