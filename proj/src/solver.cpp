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

#include "steadyent/solver.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/QR>
#include <boost/numeric/odeint.hpp>
#include <boost/numeric/odeint/external/eigen/eigen.hpp>
#include <unsupported/Eigen/IterativeSolvers>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "krylov.hpp"

namespace steadyent {
namespace {

namespace odeint = boost::numeric::odeint;

using State = Eigen::VectorXd;
using Stepper = odeint::runge_kutta_dopri5<State, double, State, double,
                                           odeint::vector_space_algebra>;

DensityMatrix normalized_state(Operator rho) {
  rho = hermitian_part(rho);
  const Complex tr = rho.trace();
  if (std::abs(tr) < 1e-300) throw SolverError("steady state has zero trace");
  rho /= tr.real();
  return DensityMatrix::assume_valid(std::move(rho));
}

double residual_norm(const Liouvillian& gen, const Operator& rho) { return gen(rho).norm(); }

// dx/dt = L x with rho packed as interleaved (re, im) pairs in column-major
// order.
class PackedGenerator {
 public:
  explicit PackedGenerator(const Liouvillian& gen)
      : gen_(gen), rho_(gen.dim(), gen.dim()), out_(gen.dim(), gen.dim()) {}

  void operator()(const State& x, State& dxdt, double /*t*/) {
    std::copy_n(x.data(), x.size(), reinterpret_cast<double*>(rho_.data()));
    gen_.apply(rho_, out_);
    dxdt.resize(x.size());
    std::copy_n(reinterpret_cast<const double*>(out_.data()), x.size(), dxdt.data());
  }

 private:
  const Liouvillian& gen_;
  Operator rho_;
  Operator out_;
};

State pack(const Operator& rho) {
  return Eigen::Map<const State>(reinterpret_cast<const double*>(rho.data()), 2 * rho.size());
}

Operator unpack(const State& x, Eigen::Index dim) {
  Operator rho(dim, dim);
  std::copy_n(x.data(), x.size(), reinterpret_cast<double*>(rho.data()));
  return rho;
}

double radius_estimate(const Liouvillian& gen, const ModelConfig& config) {
  return gen.diagonal().cwiseAbs().maxCoeff() +
         config.reset.r * static_cast<double>(config.n_qubits);
}

// Requested tolerance, raised to the level that roundoff in L rho allows.
double attainable(double tol, const Liouvillian& gen, const ModelConfig& config) {
  return std::max(tol, 100.0 * std::numeric_limits<double>::epsilon() * radius_estimate(gen, config));
}

// Drives a controlled Dormand-Prince stepper from t0 up to t_end. `done` is
// consulted after each accepted step and may stop the run early.
template <typename Done>
double integrate(const ModelConfig& config, const Liouvillian& gen, State& x, double t_end,
                 const IntegratorOptions& options, Done&& done) {
  PackedGenerator system(gen);
  auto stepper = odeint::make_controlled(options.abs_tol, options.rel_tol, Stepper());
  // Near the fixed point the error estimate vanishes and the controller would
  // push the step to the edge of the stability region, where the residual
  // stalls at roughly tol * ||L||. Cap it well inside instead.
  const double radius = radius_estimate(gen, config);
  const double max_step = options.max_step_factor / std::max(radius, 1e-300);
  double t = 0.0;
  double dt = 1e-3 / std::max(max_rate(config), 1.0);
  while (t < t_end) {
    double step = std::min({dt, max_step, t_end - t});
    const double t_before = t;
    const auto outcome = stepper.try_step(system, x, t, step);
    if (outcome == odeint::fail) {
      dt = step;
      if (dt < 1e-14 * std::max(1.0, t)) {
        std::ostringstream msg;
        msg << "step size underflow at t = " << t;
        throw IntegrationError(msg.str());
      }
      continue;
    }
    // on success `step` holds the suggested next step size
    dt = step;
    if (t <= t_before) throw IntegrationError("integrator made no progress");
    if (done(x, t)) break;
  }
  return t;
}

}  // namespace

SteadyStateResult steady_state_dense(const ModelConfig& config, double tol) {
  if (!(tol > 0.0)) throw ArgumentError("steady_state_dense: tol must be positive");
  const SuperOperator sup = assemble_dense(config);
  const Eigen::MatrixXcd& l = sup.matrix();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(l, true);
  if (es.info() != Eigen::Success) throw SolverError("steady_state_dense: eigensolver failed");

  const Eigen::VectorXcd& values = es.eigenvalues();
  const double null_tol = 1e-9 * std::max(1.0, l.cwiseAbs().rowwise().sum().maxCoeff());
  std::vector<Eigen::Index> null_idx;
  Eigen::Index best = 0;
  double gap = std::numeric_limits<double>::infinity();
  for (Eigen::Index k = 0; k < values.size(); ++k) {
    if (std::abs(values[k]) < std::abs(values[best])) best = k;
    if (std::abs(values[k]) <= null_tol) {
      null_idx.push_back(k);
    } else {
      gap = std::min(gap, -values[k].real());
    }
  }
  if (null_idx.empty()) {
    std::ostringstream msg;
    msg << "no eigenvalue within " << null_tol << " of zero (closest " << values[best] << ")";
    throw SolverError(msg.str());
  }

  const Eigen::Index dim = Eigen::Index{1} << config.n_qubits;
  Eigen::VectorXcd v;
  if (null_idx.size() == 1) {
    v = es.eigenvectors().col(best);
    // fix the phase so the trace is real and positive
    const Complex tr = devectorize(v).trace();
    v *= std::conj(tr) / std::abs(tr);
  } else {
    Eigen::MatrixXcd basis(l.rows(), static_cast<Eigen::Index>(null_idx.size()));
    for (std::size_t k = 0; k < null_idx.size(); ++k) {
      basis.col(static_cast<Eigen::Index>(k)) = es.eigenvectors().col(null_idx[k]);
    }
    const Eigen::VectorXcd mixed =
        vectorize(Operator::Identity(dim, dim) / static_cast<double>(dim));
    v = basis * basis.colPivHouseholderQr().solve(mixed);
  }

  SteadyStateResult result{normalized_state(devectorize(v)), 0.0, true, std::nullopt, 0.0};
  result.unique = null_idx.size() == 1;
  if (std::isfinite(gap)) result.spectral_gap = gap;
  const Liouvillian gen(config);
  result.residual = residual_norm(gen, result.state.matrix());
  tol = attainable(tol, gen, config);
  if (result.residual > tol) {
    std::ostringstream msg;
    msg << "steady_state_dense: residual " << result.residual << " above tolerance " << tol;
    throw SolverError(msg.str());
  }
  return result;
}

SteadyStateResult steady_state_lu(const ModelConfig& config, double tol) {
  const SuperOperator sup = assemble_dense(config);
  Eigen::MatrixXcd a = sup.matrix();
  const Eigen::Index dim = Eigen::Index{1} << config.n_qubits;
  a.row(0).setZero();
  for (Eigen::Index k = 0; k < dim; ++k) a(0, k + k * dim) = 1.0;
  Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(a.rows());
  rhs[0] = 1.0;
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(a);
  if (!lu.isInvertible()) throw SolverError("steady_state_lu: trace-augmented system is singular");
  SteadyStateResult result{normalized_state(devectorize(lu.solve(rhs))), 0.0, true, std::nullopt, 0.0};
  const Liouvillian gen(config);
  result.residual = residual_norm(gen, result.state.matrix());
  tol = attainable(tol, gen, config);
  if (result.residual > tol) {
    std::ostringstream msg;
    msg << "steady_state_lu: residual " << result.residual << " above tolerance " << tol;
    throw SolverError(msg.str());
  }
  return result;
}

double residual_floor(const ModelConfig& config) {
  const Liouvillian gen(config);
  return attainable(0.0, gen, config);
}

double default_t_max(const ModelConfig& config) {
  const double rate = min_positive_rate(config);
  return 100.0 / (rate > 0.0 ? rate : std::max(max_rate(config), 1.0));
}

SteadyStateResult steady_state_evolve(const ModelConfig& config, const DensityMatrix& rho0,
                                      double tol, std::optional<double> t_max,
                                      const IntegratorOptions& options) {
  if (!(tol > 0.0)) throw ArgumentError("steady_state_evolve: tol must be positive");
  const Liouvillian gen(config);
  if (rho0.dim() != gen.dim()) throw ArgumentError("steady_state_evolve: dimension mismatch");
  const double horizon = t_max.value_or(default_t_max(config));
  tol = attainable(tol, gen, config);

  State x = pack(rho0.matrix());
  Operator rho(gen.dim(), gen.dim());
  double residual = residual_norm(gen, rho0.matrix());
  double t = 0.0;
  if (residual > tol) {
    t = integrate(config, gen, x, horizon, options, [&](const State& xs, double) {
      rho = unpack(xs, gen.dim());
      residual = residual_norm(gen, rho);
      return residual <= tol;
    });
  } else {
    rho = rho0.matrix();
  }
  if (residual > tol) {
    std::ostringstream msg;
    msg << "no convergence by t = " << horizon << " (residual " << residual << ")";
    throw TimeoutError(msg.str(), residual);
  }
  SteadyStateResult result{normalized_state(unpack(x, gen.dim())), 0.0, true, std::nullopt, 0.0};
  result.residual = residual_norm(gen, result.state.matrix());
  result.time = t;
  return result;
}

SteadyStateResult steady_state_krylov(const ModelConfig& config, double tol,
                                      const KrylovOptions& options) {
  if (!(tol > 0.0)) throw ArgumentError("steady_state_krylov: tol must be positive");
  const Liouvillian gen(config);
  tol = attainable(tol, gen, config);
  const Eigen::Index d = gen.dim();
  const double shift = std::max(max_rate(config), 1.0);
  const detail::AugmentedGenerator a(gen, shift);
  const Eigen::VectorXcd b =
      vectorize(Operator::Identity(d, d) * (shift / static_cast<double>(d)));

  Eigen::GMRES<detail::AugmentedGenerator, detail::GeneratorJacobi> gmres;
  gmres.set_restart(options.restart);
  gmres.setMaxIterations(options.max_iterations);
  gmres.setTolerance(std::max(0.1 * tol / b.norm(), 1e-15));
  gmres.compute(a);

  Eigen::VectorXcd x = b / shift;
  double residual = std::numeric_limits<double>::infinity();
  Operator rho;
  for (int pass = 0; pass <= options.refinements; ++pass) {
    x = gmres.solveWithGuess(b, x);
    rho = hermitian_part(devectorize(x));
    rho /= rho.trace().real();
    residual = residual_norm(gen, rho);
    if (residual <= tol) break;
    x = vectorize(rho);
  }
  if (!(residual <= tol)) {
    std::ostringstream msg;
    msg << "steady_state_krylov: residual " << residual << " above tolerance " << tol;
    throw SolverError(msg.str());
  }
  SteadyStateResult result{DensityMatrix::assume_valid(std::move(rho)), 0.0, true, std::nullopt, 0.0};
  result.residual = residual;
  return result;
}

SteadyStateResult steady_state(const ModelConfig& config, double tol, int dense_limit) {
  if (config.n_qubits <= std::min(dense_limit, kMaxDenseQubits)) {
    return steady_state_dense(config, tol);
  }
  try {
    return steady_state_krylov(config, tol);
  } catch (const SolverError&) {
  }
  DensityMatrix start = DensityMatrix::maximally_mixed(config.n_qubits);
  if (config.reset.r > 0.0) {
    std::vector<Operator> factors(config.reset.chi.begin(), config.reset.chi.end());
    start = DensityMatrix::assume_valid(tensor(factors));
  }
  return steady_state_evolve(config, start, tol);
}

DensityMatrix propagate(const ModelConfig& config, const DensityMatrix& rho0, double t,
                        const IntegratorOptions& options) {
  if (!(t >= 0.0)) throw ArgumentError("propagate: t must be >= 0");
  const Liouvillian gen(config);
  if (rho0.dim() != gen.dim()) throw ArgumentError("propagate: dimension mismatch");
  if (t == 0.0) return rho0;
  State x = pack(rho0.matrix());
  integrate(config, gen, x, t, options, [](const State&, double) { return false; });
  return DensityMatrix::assume_valid(unpack(x, gen.dim()));
}

std::vector<Complex> spectrum(const ModelConfig& config) {
  const SuperOperator sup = assemble_dense(config);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(sup.matrix(), false);
  if (es.info() != Eigen::Success) throw SolverError("spectrum: eigensolver failed");
  const Eigen::VectorXcd& v = es.eigenvalues();
  return {v.data(), v.data() + v.size()};
}

void sort_spectrum(std::vector<Complex>& eigenvalues, double tol) {
  std::sort(eigenvalues.begin(), eigenvalues.end(),
            [](Complex a, Complex b) { return a.real() > b.real(); });
  // Real parts that agree to `tol` form one group, ordered by imaginary part.
  auto begin = eigenvalues.begin();
  while (begin != eigenvalues.end()) {
    auto end = begin + 1;
    while (end != eigenvalues.end() && (end - 1)->real() - end->real() <= tol) ++end;
    std::sort(begin, end, [](Complex a, Complex b) { return a.imag() > b.imag(); });
    begin = end;
  }
}

}  // namespace steadyent
