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

// Matrix-free adaptor so Eigen's iterative solvers can work on
//
//   A x = L x + shift * tr(x) * vec(I/d),
//
// which is nonsingular whenever L has a unique steady state. The solution of
// A x = shift * vec(I/d) is that steady state with unit trace.

#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "steadyent/liouvillian.hpp"

namespace steadyent::detail {
class AugmentedGenerator;
}

namespace Eigen::internal {
template <>
struct traits<steadyent::detail::AugmentedGenerator>
    : public Eigen::internal::traits<Eigen::SparseMatrix<steadyent::Complex>> {};
}  // namespace Eigen::internal

namespace steadyent::detail {

class AugmentedGenerator : public Eigen::EigenBase<AugmentedGenerator> {
 public:
  using Scalar = Complex;
  using RealScalar = double;
  using StorageIndex = int;
  enum {
    ColsAtCompileTime = Eigen::Dynamic,
    MaxColsAtCompileTime = Eigen::Dynamic,
    IsRowMajor = false
  };

  AugmentedGenerator(const Liouvillian& gen, double shift)
      : gen_(gen), shift_(shift), in_(gen.dim(), gen.dim()), out_(gen.dim(), gen.dim()) {}

  Eigen::Index rows() const { return gen_.dim() * gen_.dim(); }
  Eigen::Index cols() const { return rows(); }
  double shift() const { return shift_; }
  Eigen::Index dim() const { return gen_.dim(); }

  template <typename Rhs>
  Eigen::Product<AugmentedGenerator, Rhs, Eigen::AliasFreeProduct> operator*(
      const Eigen::MatrixBase<Rhs>& x) const {
    return Eigen::Product<AugmentedGenerator, Rhs, Eigen::AliasFreeProduct>(*this, x.derived());
  }

  void apply(const Eigen::VectorXcd& x, Eigen::VectorXcd& y) const {
    const Eigen::Index d = gen_.dim();
    in_ = Eigen::Map<const Operator>(x.data(), d, d);
    gen_.apply(in_, out_);
    const Complex tr = in_.trace();
    out_.diagonal().array() += shift_ * tr / static_cast<double>(d);
    y = Eigen::Map<const Eigen::VectorXcd>(out_.data(), out_.size());
  }

  Eigen::VectorXcd diagonal() const {
    const Eigen::Index d = gen_.dim();
    Operator diag = gen_.diagonal();
    diag.diagonal().array() += shift_ / static_cast<double>(d);
    return Eigen::Map<const Eigen::VectorXcd>(diag.data(), diag.size());
  }

 private:
  const Liouvillian& gen_;
  double shift_;
  mutable Operator in_;
  mutable Operator out_;
};

/// Jacobi preconditioner built from AugmentedGenerator::diagonal().
class GeneratorJacobi {
 public:
  using StorageIndex = int;
  enum { ColsAtCompileTime = Eigen::Dynamic, MaxColsAtCompileTime = Eigen::Dynamic };

  GeneratorJacobi() = default;

  template <typename MatType>
  GeneratorJacobi& analyzePattern(const MatType&) {
    return *this;
  }
  GeneratorJacobi& factorize(const AugmentedGenerator& a) {
    inv_diag_ = a.diagonal();
    for (auto& v : inv_diag_) v = (std::abs(v) > 1e-300) ? Complex(1.0) / v : Complex(1.0);
    return *this;
  }
  GeneratorJacobi& compute(const AugmentedGenerator& a) { return factorize(a); }

  template <typename Rhs>
  Eigen::VectorXcd solve(const Eigen::MatrixBase<Rhs>& b) const {
    return inv_diag_.array() * b.derived().array();
  }

  Eigen::ComputationInfo info() const { return Eigen::Success; }

 private:
  Eigen::VectorXcd inv_diag_;
};

}  // namespace steadyent::detail

namespace Eigen::internal {

template <typename Rhs>
struct generic_product_impl<steadyent::detail::AugmentedGenerator, Rhs, SparseShape, DenseShape,
                            GemvProduct>
    : generic_product_impl_base<
          steadyent::detail::AugmentedGenerator, Rhs,
          generic_product_impl<steadyent::detail::AugmentedGenerator, Rhs>> {
  using Scalar = typename Product<steadyent::detail::AugmentedGenerator, Rhs>::Scalar;

  template <typename Dest>
  static void scaleAndAddTo(Dest& dst, const steadyent::detail::AugmentedGenerator& lhs,
                            const Rhs& rhs, const Scalar& alpha) {
    const Eigen::VectorXcd x = rhs;
    Eigen::VectorXcd y;
    lhs.apply(x, y);
    dst += alpha * y;
  }
};

}  // namespace Eigen::internal
