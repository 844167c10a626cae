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

// Closed forms for two qubits with H = g Z1 Z2, dephasing gamma and reset to
// |+> at rate r. These are written out from the algebra, independently of the
// generic Liouvillian code, and serve as its oracle.

#pragma once

#include <Eigen/Dense>

#include <vector>

#include "steadyent/qstate.hpp"

namespace steadyent::analytic2q {

struct TwoQubitParams {
  double g = 0.0;
  double gamma = 0.0;
  double r = 0.0;
};

/// Coefficients C(s1' s2', s1 s2) = <s1' s2'|rho|s1 s2>, stored as a 4x4
/// matrix with row 2 s1' + s2' and column 2 s1 + s2.
using Coefficients = Eigen::Matrix4cd;

/// Right-hand side of the sixteen coupled coefficient equations.
Coefficients coefficient_rhs(const Coefficients& c, const TwoQubitParams& p);

/// <00|rho|01> = <00|rho|10> in steady state.
Complex coherence_entry(const TwoQubitParams& p);
/// Common real value of the four anti-diagonal entries in steady state.
double antidiagonal_entry(const TwoQubitParams& p);

/// Steady-state density matrix; throws DomainError for r <= 0.
DensityMatrix steady_state(const TwoQubitParams& p);

/// gamma (r + gamma/2)^2 + g^2 (r + gamma) - r g (r + gamma); entanglement
/// exists exactly where this is negative.
double negativity_numerator(const TwoQubitParams& p);

/// Closed-form steady-state negativity, clamped at 0.
double negativity(const TwoQubitParams& p);

/// All sixteen generator eigenvalues with multiplicity. Past g = r/4 the
/// complex pair continues onto the real axis.
std::vector<Complex> spectrum(const TwoQubitParams& p);

/// Entanglement threshold r/gamma at coupling g/gamma > 1 (positive root of
/// the negativity numerator). Throws DomainError for g/gamma <= 1.
double threshold_r(double g_over_gamma);

}  // namespace steadyent::analytic2q
