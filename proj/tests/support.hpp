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


// Random inputs and brute-force reference implementations shared by the unit
// tests. The references only use Kronecker products and traces, never the
// bit-index arithmetic of the library.

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "steadyent/models.hpp"
#include "steadyent/qstate.hpp"

namespace testing {

using steadyent::Complex;
using steadyent::Operator;

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(20260418);
  return engine;
}

inline double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline Operator random_matrix(Eigen::Index dim) {
  std::normal_distribution<double> n;
  Operator m(dim, dim);
  for (Eigen::Index i = 0; i < m.size(); ++i) m(i) = Complex(n(rng()), n(rng()));
  return m;
}

inline Operator random_hermitian(Eigen::Index dim) {
  const Operator m = random_matrix(dim);
  return (m + m.adjoint()) / 2.0;
}

/// Full-rank random state from a Ginibre matrix.
inline steadyent::DensityMatrix random_state(int n_qubits) {
  const Operator g = random_matrix(Eigen::Index{1} << n_qubits);
  Operator rho = g * g.adjoint();
  rho /= rho.trace();
  return steadyent::DensityMatrix(rho);
}

inline Eigen::VectorXcd basis_ket(Eigen::Index dim, Eigen::Index k) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
  v(k) = 1.0;
  return v;
}

/// Single-site matrix unit |i><j| at `site`, identity elsewhere, via tensor().
inline Operator site_operator(const Eigen::Matrix2cd& op, int site, int n) {
  std::vector<Operator> factors;
  for (int s = 1; s <= n; ++s)
    factors.push_back(s == site ? Operator(op) : Operator(Eigen::Matrix2cd::Identity()));
  return steadyent::tensor(factors);
}

/// rho_keep(i, j) = tr(rho * (|j><i| on kept sites (x) I elsewhere)).
inline Operator brute_partial_trace(const Operator& rho, const std::vector<int>& keep, int n) {
  const Eigen::Index dk = Eigen::Index{1} << keep.size();
  Operator out(dk, dk);
  for (Eigen::Index i = 0; i < dk; ++i) {
    for (Eigen::Index j = 0; j < dk; ++j) {
      std::vector<Operator> factors;
      std::size_t slot = 0;
      for (int s = 1; s <= n; ++s) {
        if (slot < keep.size() && keep[slot] == s) {
          const int shift = static_cast<int>(keep.size() - 1 - slot);
          const int bi = (i >> shift) & 1;
          const int bj = (j >> shift) & 1;
          Eigen::Matrix2cd unit = Eigen::Matrix2cd::Zero();
          unit(bj, bi) = 1.0;
          factors.push_back(unit);
          ++slot;
        } else {
          factors.push_back(Eigen::Matrix2cd::Identity());
        }
      }
      out(i, j) = (rho * steadyent::tensor(factors)).trace();
    }
  }
  return out;
}

/// Partial transpose through the Pauli expansion: Y^T = -Y, the others are
/// symmetric, so each term picks up (-1)^(number of Y on transposed sites).
inline Operator brute_partial_transpose(const Operator& rho, const std::vector<int>& sites, int n) {
  using steadyent::Pauli;
  const Pauli letters[4] = {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z};
  const Eigen::Index dim = rho.rows();
  Operator out = Operator::Zero(dim, dim);
  const int terms = 1 << (2 * n);
  for (int code = 0; code < terms; ++code) {
    std::vector<Operator> factors;
    int sign = 1;
    for (int s = 1; s <= n; ++s) {
      const int letter = (code >> (2 * (n - s))) & 3;
      factors.push_back(steadyent::pauli(letters[letter]));
      const bool transposed = std::find(sites.begin(), sites.end(), s) != sites.end();
      if (transposed && letter == 2) sign = -sign;
    }
    const Operator p = steadyent::tensor(factors);
    out += static_cast<double>(sign) * ((p * rho).trace() / static_cast<double>(dim)) * p;
  }
  return out;
}

/// Generator written out term by term with full-size matrices. The reset
/// channel chi_i (x) tr_i uses Kraus operators sqrt(p_a) |phi_a><m| built from
/// the eigen-decomposition of chi_i.
inline Operator reference_generator(const steadyent::ModelConfig& c, const Operator& rho) {
  const int n = c.n_qubits;
  const Operator h = c.hamiltonian.matrix();
  const Complex i(0.0, 1.0);
  Operator out = -i * (h * rho - rho * h);
  for (const auto& jump : steadyent::local_jumps(c.noise)) {
    for (int s = 1; s <= n; ++s) {
      const Operator l = site_operator(jump.op, s, n);
      const Operator ldl = l.adjoint() * l;
      out += jump.rate * (l * rho * l.adjoint() - 0.5 * (ldl * rho + rho * ldl));
    }
  }
  for (int s = 1; s <= n; ++s) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(c.reset.chi[s - 1]);
    Operator channel = Operator::Zero(rho.rows(), rho.cols());
    for (int a = 0; a < 2; ++a) {
      const double p = std::max(0.0, es.eigenvalues()(a));
      for (int m = 0; m < 2; ++m) {
        const Eigen::Matrix2cd k = std::sqrt(p) * es.eigenvectors().col(a) *
                                   Eigen::Vector2cd::Unit(m).adjoint();
        const Operator kk = site_operator(k, s, n);
        channel += kk * rho * kk.adjoint();
      }
    }
    out += c.reset.r * (channel - rho);
  }
  return out;
}

inline Eigen::Matrix2cd random_qubit_state() {
  Eigen::Vector3d b(uniform(-1, 1), uniform(-1, 1), uniform(-1, 1));
  if (b.norm() > 1.0) b /= b.norm() * uniform(1.0, 1.5);
  return steadyent::bloch_state(b);
}

/// Valid random model: random real Pauli terms, general or dephasing noise,
/// random per-site reset states.
inline steadyent::ModelConfig random_config(int n) {
  using namespace steadyent;
  ModelConfig c;
  c.n_qubits = n;
  c.hamiltonian.n_qubits = n;
  c.hamiltonian.g = uniform(0.0, 3.0);
  const char letters[4] = {'I', 'X', 'Y', 'Z'};
  for (int k = 0; k < 3; ++k) {
    std::string word;
    for (int s = 0; s < n; ++s) word += letters[std::uniform_int_distribution<int>(0, 3)(rng())];
    c.hamiltonian.terms.push_back({uniform(-1.0, 1.0), word});
  }
  if (uniform(0, 1) < 0.5) {
    c.noise = DephasingParams{uniform(0.0, 2.0)};
  } else {
    const double b = uniform(0.0, 2.0);
    c.noise = NoiseParams{b, b / 2.0 + uniform(0.0, 1.0), uniform(0.0, 1.0)};
  }
  c.reset.r = uniform(0.0, 3.0);
  for (int s = 0; s < n; ++s) c.reset.chi.push_back(random_qubit_state());
  return validate(c);
}

}  // namespace testing

namespace testing {

/// Largest distance in a greedy nearest-neighbour pairing of two multisets
/// (infinity when the sizes differ).
inline double multiset_distance(std::vector<Complex> a, std::vector<Complex> b) {
  if (a.size() != b.size()) return INFINITY;
  double worst = 0.0;
  for (const Complex& z : a) {
    auto best = std::min_element(b.begin(), b.end(), [&](Complex u, Complex v) {
      return std::abs(u - z) < std::abs(v - z);
    });
    worst = std::max(worst, std::abs(*best - z));
    b.erase(best);
  }
  return worst;
}

}  // namespace testing
