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

#include "steadyent/errors.hpp"
#include "steadyent/qstate.hpp"
#include "support.hpp"

using namespace steadyent;
using testing::random_state;

namespace {

Eigen::VectorXcd ghz3() {
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(8);
  psi(0) = psi(7) = 1.0 / std::sqrt(2.0);
  return psi;
}

Eigen::VectorXcd bell_phi_plus() {
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(4);
  psi(0) = psi(3) = 1.0 / std::sqrt(2.0);
  return psi;
}

}  // namespace

TEST_CASE("tensor") {
  const Operator id = Eigen::Matrix2cd::Identity();
  const Operator z = pauli(Pauli::Z);
  const Operator x = pauli(Pauli::X);
  CHECK(tensor({id}).isApprox(id));

  Eigen::Vector4cd d(1, -1, -1, 1);
  CHECK((tensor({z, z}) - Operator(d.asDiagonal())).norm() == 0.0);

  const Eigen::VectorXcd ket00 = testing::basis_ket(4, 0);
  const Eigen::VectorXcd ket11 = testing::basis_ket(4, 3);
  CHECK((tensor({x, x}) * ket00 - ket11).norm() == 0.0);

  CHECK_THROWS_AS(tensor(std::vector<Operator>{}), ArgumentError);

  const Operator a = testing::random_matrix(2);
  const Operator b = testing::random_matrix(4);
  const Operator ab = tensor({a, b});
  CHECK(ab.rows() == 8);
  CHECK(ab(5, 6) == a(1, 1) * b(1, 2));
}

TEST_CASE("embed_pauli") {
  CHECK(embed_pauli(Pauli::Z, 1, 1).isApprox(Operator(pauli(Pauli::Z))));
  const Operator iz = tensor({Operator(Eigen::Matrix2cd::Identity()), Operator(pauli(Pauli::Z))});
  CHECK((embed_pauli(Pauli::Z, 2, 2) - iz).norm() == 0.0);

  // sigma_+ |1> = |0> with sigma_z |0> = +|0>.
  CHECK((embed_pauli(Pauli::Plus, 1, 1) * testing::basis_ket(2, 1) - testing::basis_ket(2, 0)).norm() ==
        0.0);
  CHECK((pauli(Pauli::Z) * testing::basis_ket(2, 0) - testing::basis_ket(2, 0)).norm() == 0.0);
  CHECK((pauli(Pauli::Minus) - Operator(pauli(Pauli::Plus)).adjoint()).norm() == 0.0);

  CHECK_THROWS_AS(embed_pauli(Pauli::X, 0, 2), ArgumentError);
  CHECK_THROWS_AS(embed_pauli(Pauli::X, 3, 2), ArgumentError);

  for (int n = 1; n <= 4; ++n) {
    for (int s = 1; s <= n; ++s) {
      const Operator op = testing::random_matrix(2);
      CHECK((embed(op, s, n) - testing::site_operator(op, s, n)).norm() < 1e-14);
    }
  }
}

TEST_CASE("partial_trace") {
  SUBCASE("product factorization") {
    const auto a = random_state(1);
    const auto b = random_state(2);
    const Operator ab = tensor({a.matrix(), b.matrix()});
    CHECK((partial_trace(ab, {1}) - a.matrix()).norm() < 1e-14);
    CHECK((partial_trace(ab, {2, 3}) - b.matrix()).norm() < 1e-14);
  }
  SUBCASE("maximally mixed") {
    const auto mm = DensityMatrix::maximally_mixed(2);
    CHECK((partial_trace(mm, {2}).matrix() - Operator::Identity(2, 2) / 2.0).norm() < 1e-15);
  }
  SUBCASE("GHZ3") {
    const auto ghz = DensityMatrix::from_pure(ghz3());
    Operator expected = Operator::Zero(4, 4);
    expected(0, 0) = expected(3, 3) = 0.5;
    CHECK((partial_trace(ghz, {1, 2}).matrix() - expected).norm() < 1e-15);
    CHECK((testing::brute_partial_trace(ghz.matrix(), {1, 2}, 3) - expected).norm() < 1e-15);
  }
  SUBCASE("against brute-force contraction") {
    const std::vector<std::vector<int>> keeps = {{1}, {2}, {3}, {4}, {1, 3}, {2, 4}, {1, 2, 4}};
    for (const auto& keep : keeps) {
      const auto rho = random_state(4);
      const Operator fast = partial_trace(rho.matrix(), std::span<const int>(keep));
      CHECK((fast - testing::brute_partial_trace(rho.matrix(), keep, 4)).norm() < 1e-13);
      CHECK(std::abs(fast.trace() - 1.0) < 1e-13);
    }
  }
  SUBCASE("errors") {
    const auto rho = random_state(2);
    CHECK_THROWS_AS(partial_trace(rho, std::span<const int>()), ArgumentError);
    CHECK_THROWS_AS(partial_trace(rho, {3}), ArgumentError);
  }
}

TEST_CASE("partial_transpose") {
  SUBCASE("involution and brute-force agreement") {
    for (int trial = 0; trial < 5; ++trial) {
      const auto rho = random_state(3);
      const Bipartition split(3, {1, 3});
      const Operator pt = partial_transpose(rho, split);
      CHECK((partial_transpose_mask(pt, split.mask()) - rho.matrix()).norm() < 1e-14);
      CHECK((pt - testing::brute_partial_transpose(rho.matrix(), split.members(), 3)).norm() < 1e-13);
      CHECK(hermiticity_defect(pt) < 1e-14);
      CHECK(std::abs(pt.trace() - 1.0) < 1e-14);
    }
  }
  SUBCASE("product state is PPT") {
    const auto a = random_state(1);
    const auto b = random_state(1);
    const DensityMatrix ab(tensor({a.matrix(), b.matrix()}));
    Eigen::SelfAdjointEigenSolver<Operator> es(partial_transpose(ab, Bipartition(2, {1})));
    CHECK(es.eigenvalues().minCoeff() >= -1e-14);
  }
  SUBCASE("Bell state") {
    const auto bell = DensityMatrix::from_pure(bell_phi_plus());
    Eigen::SelfAdjointEigenSolver<Operator> es(partial_transpose(bell, Bipartition(2, {1})));
    const Eigen::Vector4d expected(-0.5, 0.5, 0.5, 0.5);
    CHECK((es.eigenvalues() - expected).norm() < 1e-14);
  }
  SUBCASE("dimension mismatch") {
    const auto rho = random_state(2);
    CHECK_THROWS_AS(partial_transpose(rho, Bipartition(3, {1})), ArgumentError);
  }
}

TEST_CASE("DensityMatrix validation") {
  CHECK_THROWS_AS(DensityMatrix(Operator::Identity(3, 3) / 3.0), ArgumentError);
  CHECK_THROWS_AS(DensityMatrix(Operator::Identity(2, 2)), ValidationError);
  Operator not_hermitian = Operator::Identity(2, 2) / 2.0;
  not_hermitian(0, 1) = 0.1;
  CHECK_THROWS_AS(DensityMatrix{not_hermitian}, ValidationError);
  Operator negative = Operator::Zero(2, 2);
  negative(0, 0) = 1.1;
  negative(1, 1) = -0.1;
  CHECK_THROWS_AS(DensityMatrix{negative}, ValidationError);

  const auto mm = DensityMatrix::maximally_mixed(3);
  CHECK(mm.n_qubits() == 3);
  CHECK(mm.dim() == 8);
  CHECK(mm.min_eigenvalue() == doctest::Approx(0.125));

  const DensityMatrix parts[] = {random_state(1), random_state(2)};
  const auto prod = DensityMatrix::product(parts);
  CHECK((prod.matrix() - tensor({parts[0].matrix(), parts[1].matrix()})).norm() < 1e-15);
}

TEST_CASE("Bipartition canonical form") {
  const Bipartition a(3, {3});
  const Bipartition b(3, {1, 2});
  CHECK(a == b);
  CHECK(a.members() == std::vector<int>{1, 2});
  CHECK(a.complement() == std::vector<int>{3});
  CHECK_THROWS_AS(Bipartition(3, {}), ArgumentError);
  CHECK_THROWS_AS(Bipartition(3, {1, 2, 3}), ArgumentError);
  CHECK_THROWS_AS(Bipartition(3, {4}), ArgumentError);
}

TEST_CASE("vectorization is column stacking") {
  Operator m(2, 2);
  m << 1.0, 2.0, 3.0, 4.0;
  const Eigen::VectorXcd v = vectorize(m);
  CHECK(v(1) == Complex(3.0));
  CHECK(v(2) == Complex(2.0));
  CHECK(devectorize(v) == m);
}

TEST_CASE("trace distance") {
  const auto a = DensityMatrix::from_pure(testing::basis_ket(2, 0));
  const auto b = DensityMatrix::from_pure(testing::basis_ket(2, 1));
  CHECK(trace_distance(a, b) == doctest::Approx(1.0));
  CHECK(trace_distance(a, a) == doctest::Approx(0.0));
}
