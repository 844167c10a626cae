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

// Dense multi-qubit operators and density matrices.
//
// Basis convention: a basis index is the bit string s_1 s_2 ... s_N read as a
// binary number with qubit 1 as the most significant bit. sigma_z|0> = +|0>,
// sigma_z|1> = -|1>, and sigma_+ = |0><1| raises |1> to |0>.
//
// Qubit indices in the public API are 1-based.

#pragma once

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "steadyent/errors.hpp"

namespace steadyent {

using Complex = std::complex<double>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Dense operator on the 2^N-dimensional Hilbert space.
using Operator = Eigen::MatrixXcd;

enum class Pauli { I, X, Y, Z, Plus, Minus };

inline constexpr int kMaxQubits = 7;

inline bool is_power_of_two(Eigen::Index n) { return n > 0 && (n & (n - 1)) == 0; }

/// Number of qubits for a 2^N dimension; throws for anything else.
inline int qubit_count(Eigen::Index dim) {
  if (!is_power_of_two(dim)) {
    throw ArgumentError("dimension " + std::to_string(dim) + " is not a power of two");
  }
  return std::countr_zero(static_cast<std::uint64_t>(dim));
}

/// Bit mask of `site` (1-based) in an `n_qubits` register.
inline std::uint32_t site_mask(int site, int n_qubits) {
  if (site < 1 || site > n_qubits) {
    throw ArgumentError("qubit index " + std::to_string(site) + " outside 1.." +
                        std::to_string(n_qubits));
  }
  return std::uint32_t{1} << (n_qubits - site);
}

inline std::uint32_t sites_mask(std::span<const int> sites, int n_qubits) {
  std::uint32_t mask = 0;
  for (int s : sites) mask |= site_mask(s, n_qubits);
  return mask;
}

inline Eigen::Matrix2cd pauli(Pauli which) {
  using namespace std::complex_literals;
  Eigen::Matrix2cd m;
  switch (which) {
    case Pauli::I: m << 1.0, 0.0, 0.0, 1.0; break;
    case Pauli::X: m << 0.0, 1.0, 1.0, 0.0; break;
    case Pauli::Y: m << 0.0, -1i, 1i, 0.0; break;
    case Pauli::Z: m << 1.0, 0.0, 0.0, -1.0; break;
    case Pauli::Plus: m << 0.0, 1.0, 0.0, 0.0; break;
    case Pauli::Minus: m << 0.0, 0.0, 1.0, 0.0; break;
  }
  return m;
}

/// Kronecker product of `factors` in list order.
template <typename Scalar>
Matrix<Scalar> tensor(std::span<const Matrix<Scalar>> factors) {
  if (factors.empty()) throw ArgumentError("tensor: empty factor list");
  Matrix<Scalar> out = factors.front();
  for (std::size_t k = 1; k < factors.size(); ++k) {
    Matrix<Scalar> next = Eigen::kroneckerProduct(out, factors[k]);
    out = std::move(next);
  }
  return out;
}

template <typename Scalar>
Matrix<Scalar> tensor(const std::vector<Matrix<Scalar>>& factors) {
  return tensor(std::span<const Matrix<Scalar>>(factors));
}

inline Operator tensor(std::initializer_list<Operator> factors) {
  return tensor(std::span<const Operator>(factors.begin(), factors.size()));
}

/// `op` (2x2) acting on `site`, identity elsewhere.
template <typename Derived>
Matrix<typename Derived::Scalar> embed(const Eigen::MatrixBase<Derived>& op, int site,
                                       int n_qubits) {
  using Scalar = typename Derived::Scalar;
  if (op.rows() != 2 || op.cols() != 2) throw ArgumentError("embed: expected a 2x2 operator");
  const std::uint32_t mask = site_mask(site, n_qubits);
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  Matrix<Scalar> out = Matrix<Scalar>::Zero(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    const int bc = (col & mask) ? 1 : 0;
    const Eigen::Index base = col & ~static_cast<Eigen::Index>(mask);
    for (int br = 0; br < 2; ++br) {
      const Scalar v = op(br, bc);
      if (v == Scalar(0)) continue;
      out(br ? (base | mask) : base, col) = v;
    }
  }
  return out;
}

inline Operator embed_pauli(Pauli which, int site, int n_qubits) {
  return embed(pauli(which), site, n_qubits);
}

/// Reduced operator on the qubits in `keep` (kept in increasing site order).
template <typename Derived>
Matrix<typename Derived::Scalar> partial_trace(const Eigen::MatrixBase<Derived>& rho,
                                               std::span<const int> keep) {
  using Scalar = typename Derived::Scalar;
  const int n = qubit_count(rho.rows());
  if (rho.cols() != rho.rows()) throw ArgumentError("partial_trace: matrix not square");
  if (keep.empty()) throw ArgumentError("partial_trace: keep set is empty");
  std::vector<int> sites(keep.begin(), keep.end());
  std::sort(sites.begin(), sites.end());
  if (std::adjacent_find(sites.begin(), sites.end()) != sites.end()) {
    throw ArgumentError("partial_trace: duplicate qubit in keep set");
  }
  const std::uint32_t keep_mask = sites_mask(sites, n);
  const int n_keep = static_cast<int>(sites.size());
  const Eigen::Index d_keep = Eigen::Index{1} << n_keep;
  const Eigen::Index d_trace = Eigen::Index{1} << (n - n_keep);

  // full index for (kept bits, traced bits)
  Eigen::Matrix<Eigen::Index, Eigen::Dynamic, Eigen::Dynamic> full(d_keep, d_trace);
  const Eigen::Index dim = rho.rows();
  for (Eigen::Index a = 0; a < dim; ++a) {
    Eigen::Index k = 0, t = 0;
    for (int q = 1; q <= n; ++q) {
      const bool bit = a & site_mask(q, n);
      if (keep_mask & site_mask(q, n)) {
        k = (k << 1) | bit;
      } else {
        t = (t << 1) | bit;
      }
    }
    full(k, t) = a;
  }

  Matrix<Scalar> out = Matrix<Scalar>::Zero(d_keep, d_keep);
  for (Eigen::Index j = 0; j < d_keep; ++j) {
    for (Eigen::Index i = 0; i < d_keep; ++i) {
      Scalar acc(0);
      for (Eigen::Index t = 0; t < d_trace; ++t) acc += rho(full(i, t), full(j, t));
      out(i, j) = acc;
    }
  }
  return out;
}

template <typename Derived>
Matrix<typename Derived::Scalar> partial_trace(const Eigen::MatrixBase<Derived>& rho,
                                               std::initializer_list<int> keep) {
  return partial_trace(rho, std::span<const int>(keep.begin(), keep.size()));
}

/// Transpose of the row/column bits selected by `mask`.
template <typename Derived>
Matrix<typename Derived::Scalar> partial_transpose_mask(const Eigen::MatrixBase<Derived>& rho,
                                                        std::uint32_t mask) {
  const Eigen::Index dim = rho.rows();
  Matrix<typename Derived::Scalar> out(dim, dim);
  const auto m = static_cast<Eigen::Index>(mask);
  for (Eigen::Index b = 0; b < dim; ++b) {
    for (Eigen::Index a = 0; a < dim; ++a) {
      out(a, b) = rho((a & ~m) | (b & m), (b & ~m) | (a & m));
    }
  }
  return out;
}

/// Partial transpose on an arbitrary set of sites (not necessarily canonical).
template <typename Derived>
Matrix<typename Derived::Scalar> partial_transpose(const Eigen::MatrixBase<Derived>& rho,
                                                   std::span<const int> sites) {
  return partial_transpose_mask(rho, sites_mask(sites, qubit_count(rho.rows())));
}

/// Hermitian part (rho + rho^dagger) / 2.
template <typename Derived>
Matrix<typename Derived::Scalar> hermitian_part(const Eigen::MatrixBase<Derived>& m) {
  return (m + m.adjoint()) / 2.0;
}

/// Largest absolute elementwise deviation from Hermiticity.
template <typename Derived>
double hermiticity_defect(const Eigen::MatrixBase<Derived>& m) {
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

/// Trace norm of a Hermitian matrix (sum of |eigenvalues|).
double trace_norm_hermitian(const Operator& h);

/// Column-stacking vectorization; Eigen's column-major storage is exactly
/// this layout.
inline Eigen::VectorXcd vectorize(const Operator& rho) {
  return Eigen::Map<const Eigen::VectorXcd>(rho.data(), rho.size());
}

inline Operator devectorize(const Eigen::VectorXcd& v) {
  const auto dim = static_cast<Eigen::Index>(std::llround(std::sqrt(double(v.size()))));
  if (dim * dim != v.size()) throw ArgumentError("devectorize: length is not a square");
  return Eigen::Map<const Operator>(v.data(), dim, dim);
}

/// Validation thresholds for density matrices.
struct StateTolerance {
  double hermiticity = 1e-10;
  double trace = 1e-10;
  double min_eigenvalue = -1e-9;
};

/// Hermitian, unit-trace, positive semidefinite operator on N qubits.
class DensityMatrix {
 public:
  /// Validates `op`; throws ValidationError on any invariant violation.
  explicit DensityMatrix(Operator op, const StateTolerance& tol = {});

  /// Skips the eigenvalue check. Used for states produced by the solvers,
  /// which may call `check()` later.
  static DensityMatrix assume_valid(Operator op);

  static DensityMatrix from_pure(const Eigen::VectorXcd& psi);
  static DensityMatrix maximally_mixed(int n_qubits);
  /// Tensor product of single- or multi-qubit states in list order.
  static DensityMatrix product(std::span<const DensityMatrix> factors);

  const Operator& matrix() const noexcept { return op_; }
  Eigen::Index dim() const noexcept { return op_.rows(); }
  int n_qubits() const noexcept { return n_qubits_; }
  Complex operator()(Eigen::Index i, Eigen::Index j) const { return op_(i, j); }

  /// Re-runs the invariant checks; throws ValidationError when they fail.
  void check(const StateTolerance& tol = {}) const;
  double min_eigenvalue() const;

 private:
  struct Unchecked {};
  DensityMatrix(Operator op, Unchecked);

  Operator op_;
  int n_qubits_ = 0;
};

/// Trace distance 1/2 ||a - b||_1.
double trace_distance(const Operator& a, const Operator& b);
inline double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  return trace_distance(a.matrix(), b.matrix());
}

/// A split A | complement of the qubit set. Stored canonically: A is the side
/// that does not contain qubit N, so each unordered split has one
/// representation.
class Bipartition {
 public:
  Bipartition(int n_qubits, std::vector<int> members_of_a);

  int n_qubits() const noexcept { return n_qubits_; }
  const std::vector<int>& members() const noexcept { return members_; }
  std::vector<int> complement() const;
  std::uint32_t mask() const noexcept { return mask_; }

  bool operator==(const Bipartition&) const = default;

 private:
  int n_qubits_;
  std::vector<int> members_;
  std::uint32_t mask_ = 0;
};

/// Partial transpose with respect to side A of `split`.
Operator partial_transpose(const DensityMatrix& rho, const Bipartition& split);

/// Reduced state on `keep`.
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep);
inline DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<int> keep) {
  return partial_trace(rho, std::span<const int>(keep.begin(), keep.size()));
}

}  // namespace steadyent
