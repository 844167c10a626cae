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


#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "steadyent/errors.hpp"
#include "steadyent/liouvillian.hpp"
#include "steadyent/models.hpp"
#include "support.hpp"

using namespace steadyent;

namespace {

// Matrix of the basis relabeling that moves qubit k to position perm[k].
Operator permutation_matrix(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  const Eigen::Index dim = Eigen::Index{1} << n;
  Operator p = Operator::Zero(dim, dim);
  for (Eigen::Index a = 0; a < dim; ++a) {
    Eigen::Index b = 0;
    for (int k = 0; k < n; ++k)
      if ((a >> (n - 1 - k)) & 1) b |= Eigen::Index{1} << (n - 1 - perm[k]);
    p(b, a) = 1.0;
  }
  return p;
}

}  // namespace

TEST_CASE("ising") {
  const double g = 1.7;
  const Operator h = ising(g, {{1, 2}}, 2).matrix();
  const Eigen::Vector4cd d(g, -g, -g, g);
  CHECK((h - Operator(d.asDiagonal())).norm() < 1e-15);
  CHECK(ising(g, all_pairs(5), 5).terms.size() == 10);
  CHECK(ising(0.0, {{1, 2}}, 2).matrix().norm() == 0.0);
  CHECK_THROWS_AS(ising(g, {{1, 1}}, 2), ArgumentError);
  CHECK_THROWS_AS(ising(g, {{1, 3}}, 2), ArgumentError);
  CHECK_THROWS_AS(ising(g, {{1, 2}, {2, 1}}, 2), ArgumentError);

  // All-pairs coupling is invariant under any relabeling of the qubits.
  const Operator h4 = ising(0.9, all_pairs(4), 4).matrix();
  std::vector<int> perm(4);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    const Operator p = permutation_matrix(perm);
    CHECK((p * h4 * p.adjoint() - h4).norm() < 1e-14);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("heisenberg") {
  const double g = 0.8;
  const Operator h = heisenberg(g).matrix();
  Eigen::SelfAdjointEigenSolver<Operator> es(h);
  CHECK((es.eigenvalues() - Eigen::Vector4d(-3 * g, g, g, g)).norm() < 1e-14);
  CHECK(heisenberg(0.0).matrix().norm() == 0.0);
  const Operator sz = embed_pauli(Pauli::Z, 1, 2) + embed_pauli(Pauli::Z, 2, 2);
  CHECK((h * sz - sz * h).norm() < 1e-14);
}

TEST_CASE("xyz_field") {
  const double g = 1.3;
  const Operator h = xyz_field(g).matrix();
  CHECK(std::abs(h.trace()) < 1e-15);
  CHECK(std::abs(h(0, 3) - Complex(0.4 * g)) < 1e-15);
  CHECK(hermiticity_defect(h) < 1e-15);
  const Operator expected =
      g * (0.7 * testing::site_operator(pauli(Pauli::X), 1, 2) * testing::site_operator(pauli(Pauli::X), 2, 2) +
           0.3 * testing::site_operator(pauli(Pauli::Y), 1, 2) * testing::site_operator(pauli(Pauli::Y), 2, 2) +
           testing::site_operator(pauli(Pauli::Z), 1, 2) * testing::site_operator(pauli(Pauli::Z), 2, 2) +
           0.5 * (testing::site_operator(pauli(Pauli::X), 1, 2) + testing::site_operator(pauli(Pauli::X), 2, 2)));
  CHECK((h - expected).norm() < 1e-14);
}

TEST_CASE("Hamiltonians are Hermitian") {
  for (int trial = 0; trial < 20; ++trial) {
    const auto c = testing::random_config(1 + trial % 3);
    CHECK(hermiticity_defect(c.hamiltonian.matrix()) <= 1e-12);
    CHECK((Operator(c.hamiltonian.sparse()) - c.hamiltonian.matrix()).norm() < 1e-14);
  }
}

TEST_CASE("validate") {
  ModelConfig c = ising_dephasing_2q(1.0, 1.0, 1.0);
  c.noise = NoiseParams{2.0, 1.0, 0.5};
  CHECK_NOTHROW(validate(c));

  c.noise = NoiseParams{2.0, 0.5, 0.5};
  try {
    validate(c);
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("2C >= B violated") != std::string::npos);
    CHECK(e.field() == "noise.C");
  }

  c.noise = NoiseParams{0.0, 1.0, 1.5};
  CHECK_THROWS_AS(validate(c), ValidationError);

  c = ising_dephasing_2q(1.0, 1.0, 1.0);
  Eigen::Matrix2cd mixed = Eigen::Matrix2cd::Zero();
  mixed(0, 0) = 0.9;
  mixed(1, 1) = 0.1;
  c.reset.chi = {mixed, mixed};
  CHECK_NOTHROW(validate(c));

  c.reset.chi[1](0, 0) = 1.2;
  try {
    validate(c);
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(e.field() == "reset.chi[2]");
  }

  c = ising_dephasing_2q(1.0, 1.0, -1.0);
  CHECK_THROWS_AS(validate(c), ValidationError);
  c = ising_dephasing_2q(1.0, -1.0, 1.0);
  CHECK_THROWS_AS(validate(c), ValidationError);
  c = ising_dephasing_2q(1.0, 1.0, 1.0);
  c.hamiltonian.terms.push_back({1.0, "XQ"});
  CHECK_THROWS_AS(validate(c), ValidationError);
}

TEST_CASE("dephasing equals general noise with B = 0") {
  for (double s : {0.0, 0.3, 1.0}) {
    ModelConfig a = ising_dephasing_2q(1.3, 0.7, 2.0);
    ModelConfig b = a;
    b.noise = NoiseParams{0.0, 0.7, s};
    CHECK((assemble_dense(a).matrix() - assemble_dense(b).matrix()).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("named and Bloch states") {
  const Eigen::Matrix2cd plus = named_state("plus");
  CHECK((pauli(Pauli::X) * plus - plus).norm() < 1e-15);
  CHECK((bloch_vector(plus) - Eigen::Vector3d(1, 0, 0)).norm() < 1e-15);
  CHECK((bloch_vector(named_state("zero")) - Eigen::Vector3d(0, 0, 1)).norm() < 1e-15);
  CHECK((bloch_vector(named_state("plus_i")) - Eigen::Vector3d(0, 1, 0)).norm() < 1e-15);

  const Eigen::Matrix2cd mixed = named_state("plus", 0.05);
  const Eigen::Matrix2cd expected = 0.95 * plus + 0.05 * named_state("minus");
  CHECK((mixed - expected).norm() < 1e-15);
  for (int k = 0; k < 10; ++k) {
    const Eigen::Matrix2cd chi = testing::random_qubit_state();
    CHECK((bloch_state(bloch_vector(chi)) - chi).norm() < 1e-14);
  }
  CHECK_THROWS(named_state("sideways"));
}

TEST_CASE("presets and reduced rates") {
  const auto x = xyz_field_preset(10.0, 3.0, 0.0);
  const auto& p = std::get<NoiseParams>(x.noise);
  CHECK(p.C == doctest::Approx(0.1));
  CHECK(p.B == doctest::Approx(0.2));
  CHECK_NOTHROW(validate(x));

  const auto d = decay_channel_preset(0.5, 1.0);
  const auto& q = std::get<NoiseParams>(d.noise);
  CHECK(q.B / 2 == doctest::Approx(1.0));
  CHECK(q.C == doctest::Approx(1.0));
  CHECK(d.reset.r == 0.0);

  const auto base = ising_dephasing_2q(1.0, 2.0, 1.0);
  const auto scaled = with_reduced_rates(base, 2.5, 5.0);
  CHECK(scaled.hamiltonian.g == doctest::Approx(5.0));
  CHECK(scaled.reset.r == doctest::Approx(10.0));
  CHECK(reference_rate(base) == 2.0);
}
