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

#include "steadyent/models.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

namespace steadyent {
namespace {

std::string ising_word(int i, int j, int n) {
  std::string w(static_cast<std::size_t>(n), 'I');
  w[static_cast<std::size_t>(i - 1)] = 'Z';
  w[static_cast<std::size_t>(j - 1)] = 'Z';
  return w;
}

std::string indexed(std::string_view base, std::size_t i) {
  std::ostringstream os;
  os << base << '[' << i << ']';
  return os.str();
}

void require_rate(double value, const std::string& field) {
  if (!std::isfinite(value)) throw ValidationError(field, "must be finite");
  if (value < 0.0) throw ValidationError(field, "must be >= 0");
}

}  // namespace

SparseOperator pauli_word(std::string_view word) {
  const int n = static_cast<int>(word.size());
  if (n < 1 || n > kMaxQubits) throw ArgumentError("Pauli word length must be 1.." +
                                                   std::to_string(kMaxQubits));
  const Eigen::Index dim = Eigen::Index{1} << n;
  std::uint32_t flip = 0;
  for (int q = 1; q <= n; ++q) {
    const char c = word[static_cast<std::size_t>(q - 1)];
    if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
      throw ArgumentError("invalid Pauli letter '" + std::string(1, c) + "' in " +
                          std::string(word));
    }
    if (c == 'X' || c == 'Y') flip |= site_mask(q, n);
  }
  std::vector<Eigen::Triplet<Complex>> triplets;
  triplets.reserve(static_cast<std::size_t>(dim));
  for (Eigen::Index col = 0; col < dim; ++col) {
    Complex phase(1.0);
    for (int q = 1; q <= n; ++q) {
      const bool bit = col & site_mask(q, n);
      switch (word[static_cast<std::size_t>(q - 1)]) {
        case 'Z': if (bit) phase = -phase; break;
        case 'Y': phase *= bit ? Complex(0, -1) : Complex(0, 1); break;
        default: break;
      }
    }
    triplets.emplace_back(col ^ static_cast<Eigen::Index>(flip), col, phase);
  }
  SparseOperator out(dim, dim);
  out.setFromTriplets(triplets.begin(), triplets.end());
  return out;
}

SparseOperator HamiltonianSpec::sparse() const {
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  SparseOperator h(dim, dim);
  for (const auto& term : terms) {
    if (term.word.size() != static_cast<std::size_t>(n_qubits)) {
      throw ArgumentError("Pauli word '" + term.word + "' does not match " +
                          std::to_string(n_qubits) + " qubits");
    }
    h += (g * term.coefficient) * pauli_word(term.word);
  }
  h.prune(Complex(0.0));
  return h;
}

Operator HamiltonianSpec::matrix() const { return Operator(sparse()); }

std::vector<std::pair<int, int>> all_pairs(int n_qubits) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= n_qubits; ++i) {
    for (int j = i + 1; j <= n_qubits; ++j) out.emplace_back(i, j);
  }
  return out;
}

HamiltonianSpec ising(double g, const std::vector<std::pair<int, int>>& pairs, int n_qubits) {
  if (n_qubits < 2 || n_qubits > kMaxQubits) {
    throw ArgumentError("ising: qubit count must be 2.." + std::to_string(kMaxQubits));
  }
  HamiltonianSpec h{n_qubits, g, {}};
  std::set<std::pair<int, int>> seen;
  for (auto [i, j] : pairs) {
    if (i < 1 || j < 1 || i > n_qubits || j > n_qubits || i == j) {
      throw ArgumentError("ising: invalid pair (" + std::to_string(i) + "," + std::to_string(j) +
                          ")");
    }
    if (!seen.insert(std::minmax(i, j)).second) {
      throw ArgumentError("ising: duplicate pair (" + std::to_string(i) + "," +
                          std::to_string(j) + ")");
    }
    h.terms.push_back({1.0, ising_word(i, j, n_qubits)});
  }
  return h;
}

HamiltonianSpec heisenberg(double g) {
  return {2, g, {{1.0, "XX"}, {1.0, "YY"}, {1.0, "ZZ"}}};
}

HamiltonianSpec xyz_field(double g) {
  return {2, g, {{0.7, "XX"}, {0.3, "YY"}, {1.0, "ZZ"}, {0.5, "XI"}, {0.5, "IX"}}};
}

HamiltonianSpec xx_coupling(double g) { return {2, g, {{1.0, "XX"}}}; }

std::vector<LocalJump> local_jumps(const Noise& noise) {
  std::vector<LocalJump> out;
  if (const auto* d = std::get_if<DephasingParams>(&noise)) {
    if (d->gamma != 0.0) out.push_back({d->gamma / 2.0, pauli(Pauli::Z)});
    return out;
  }
  const auto& p = std::get<NoiseParams>(noise);
  // sigma_- = |1><0| takes |0> (sigma_z = +1) down at rate B (1 - s);
  // sigma_+ pumps back at rate B s.
  const double down = p.B * (1.0 - p.s);
  const double up = p.B * p.s;
  const double dephase = (2.0 * p.C - p.B) / 4.0;
  if (down != 0.0) out.push_back({down, pauli(Pauli::Minus)});
  if (up != 0.0) out.push_back({up, pauli(Pauli::Plus)});
  if (dephase != 0.0) out.push_back({dephase, pauli(Pauli::Z)});
  return out;
}

ResetSpec ResetSpec::uniform(double r, const Eigen::Matrix2cd& chi, int n_qubits) {
  return {r, std::vector<Eigen::Matrix2cd>(static_cast<std::size_t>(n_qubits), chi)};
}

Eigen::Matrix2cd bloch_state(const Eigen::Vector3d& b) {
  return 0.5 * (pauli(Pauli::I) + b.x() * pauli(Pauli::X) + b.y() * pauli(Pauli::Y) +
                b.z() * pauli(Pauli::Z));
}

Eigen::Vector3d bloch_vector(const Eigen::Matrix2cd& chi) {
  return {(chi * pauli(Pauli::X)).trace().real(), (chi * pauli(Pauli::Y)).trace().real(),
          (chi * pauli(Pauli::Z)).trace().real()};
}

Eigen::Matrix2cd named_state(std::string_view name, double mix) {
  Eigen::Vector3d b;
  if (name == "zero") {
    b = {0, 0, 1};
  } else if (name == "one") {
    b = {0, 0, -1};
  } else if (name == "plus") {
    b = {1, 0, 0};
  } else if (name == "minus") {
    b = {-1, 0, 0};
  } else if (name == "plus_i") {
    b = {0, 1, 0};
  } else if (name == "minus_i") {
    b = {0, -1, 0};
  } else {
    throw ArgumentError("unknown qubit state '" + std::string(name) + "'");
  }
  if (!(mix >= 0.0 && mix <= 1.0)) throw ArgumentError("state mix must lie in [0, 1]");
  return bloch_state((1.0 - 2.0 * mix) * b);
}

ModelConfig validate(ModelConfig config) {
  const int n = config.n_qubits;
  if (n < 1 || n > kMaxQubits) {
    throw ValidationError("system.n_qubits", "must be in 1.." + std::to_string(kMaxQubits));
  }

  const auto& h = config.hamiltonian;
  if (h.n_qubits != n) {
    throw ValidationError("hamiltonian.n_qubits", "does not match system.n_qubits");
  }
  require_rate(h.g, "hamiltonian.g");
  for (std::size_t k = 0; k < h.terms.size(); ++k) {
    const auto& t = h.terms[k];
    const std::string field = indexed("hamiltonian.terms", k);
    if (!std::isfinite(t.coefficient)) throw ValidationError(field, "coefficient not finite");
    if (t.word.size() != static_cast<std::size_t>(n)) {
      throw ValidationError(field, "Pauli word '" + t.word + "' has wrong length");
    }
    if (t.word.find_first_not_of("IXYZ") != std::string::npos) {
      throw ValidationError(field, "Pauli word '" + t.word + "' has invalid letters");
    }
  }
  const double herm = hermiticity_defect(h.matrix());
  if (herm > 1e-12) throw ValidationError("hamiltonian", "not Hermitian");

  if (const auto* d = std::get_if<DephasingParams>(&config.noise)) {
    require_rate(d->gamma, "noise.gamma");
  } else {
    const auto& p = std::get<NoiseParams>(config.noise);
    require_rate(p.B, "noise.B");
    require_rate(p.C, "noise.C");
    if (!(p.s >= 0.0 && p.s <= 1.0)) throw ValidationError("noise.s", "must lie in [0, 1]");
    if (2.0 * p.C < p.B) throw ValidationError("noise.C", "2C >= B violated");
  }

  const auto& reset = config.reset;
  require_rate(reset.r, "reset.r");
  if (reset.chi.size() != static_cast<std::size_t>(n)) {
    throw ValidationError("reset.chi", "expected one reset state per qubit");
  }
  for (std::size_t i = 0; i < reset.chi.size(); ++i) {
    try {
      DensityMatrix(Operator(reset.chi[i]));
    } catch (const ValidationError& e) {
      throw ValidationError(indexed("reset.chi", i + 1), std::string("not a state (") + e.what() +
                                                             ")");
    }
  }
  return config;
}

ModelConfig ising_dephasing_2q(double g, double gamma, double r) {
  return {2, ising(g, {{1, 2}}, 2), DephasingParams{gamma},
          ResetSpec::uniform(r, named_state("plus"), 2)};
}

ModelConfig symmetric_ising(int n_qubits, double g, double gamma, double r) {
  return {n_qubits, ising(g, all_pairs(n_qubits), n_qubits), DephasingParams{gamma},
          ResetSpec::uniform(r, named_state("plus"), n_qubits)};
}

ModelConfig xyz_field_preset(double g, double r, double s, double gamma_ref) {
  const double c = 0.1 * gamma_ref;
  return {2, xyz_field(g), NoiseParams{2.0 * c, c, s},
          ResetSpec::uniform(r, named_state("plus"), 2)};
}

ModelConfig decay_channel_preset(double g, double s, double gamma) {
  return {2, xx_coupling(g), NoiseParams{2.0 * gamma, gamma, s},
          ResetSpec::uniform(0.0, named_state("plus"), 2)};
}

double reference_rate(const ModelConfig& config) {
  if (const auto* d = std::get_if<DephasingParams>(&config.noise)) {
    return d->gamma > 0.0 ? d->gamma : 1.0;
  }
  return 1.0;
}

double max_rate(const ModelConfig& config) {
  double m = std::max(std::abs(config.hamiltonian.g), std::abs(config.reset.r));
  if (const auto* d = std::get_if<DephasingParams>(&config.noise)) {
    m = std::max(m, std::abs(d->gamma));
  } else {
    const auto& p = std::get<NoiseParams>(config.noise);
    m = std::max({m, std::abs(p.B), std::abs(p.C)});
  }
  return m;
}

double min_positive_rate(const ModelConfig& config) {
  std::vector<double> rates{config.reset.r};
  if (const auto* d = std::get_if<DephasingParams>(&config.noise)) {
    rates.push_back(d->gamma);
  } else {
    const auto& p = std::get<NoiseParams>(config.noise);
    rates.push_back(p.B);
    rates.push_back(p.C);
  }
  double best = std::numeric_limits<double>::infinity();
  for (double v : rates) {
    if (v > 0.0) best = std::min(best, v);
  }
  return std::isfinite(best) ? best : 0.0;
}

ModelConfig with_reduced_rates(const ModelConfig& config, double g_reduced, double r_reduced) {
  ModelConfig out = config;
  const double unit = reference_rate(config);
  out.hamiltonian.g = g_reduced * unit;
  out.reset.r = r_reduced * unit;
  return out;
}

}  // namespace steadyent
