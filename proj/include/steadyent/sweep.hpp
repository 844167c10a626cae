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


// Parameter scans in reduced units g/gamma, r/gamma (gamma = reference_rate
// of the base config) and the preset scans built on them.

#pragma once

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "steadyent/models.hpp"

namespace steadyent {

/// lo:hi:steps[:log|lin]; log spacing is the default.
struct Axis {
  double lo = 1.0;
  double hi = 1.0;
  int steps = 1;
  bool log = true;

  static Axis parse(std::string_view text);
  /// Strictly increasing grid values; a single step yields {lo}.
  std::vector<double> values() const;
};

struct SweepOptions {
  double tol = 1e-10;
  /// 0 selects std::thread::hardware_concurrency().
  int workers = 0;
  /// Writes 0 into wall-time columns so output is byte-stable.
  bool deterministic = false;
};

/// Runs fn(0..count-1) on a pool of `workers` threads. Each index is handled
/// exactly once; exceptions propagate after all workers have stopped.
void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& fn);

/// Negativity of the (1, 2) reduced pair for N >= 3, of the full state for N = 2.
double pair_negativity(const DensityMatrix& rho);

struct SweepRow {
  double g = 0.0;
  double r = 0.0;
  double negativity = 0.0;
  std::optional<double> avg_negativity;  ///< set for N >= 3
  double residual = 0.0;
  double wall_time = 0.0;
  bool ok = true;
  std::string error;
};

/// Row-major over (g, r): g outer, r inner. Failed points carry NaN.
std::vector<SweepRow> run_sweep(const ModelConfig& base, const std::vector<double>& g_values,
                                const std::vector<double>& r_values, const SweepOptions& options);

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

struct BoundaryRow {
  double g = 0.0;
  std::optional<double> r_star;
  /// Closed-form root, only for the two-qubit Ising/dephasing/|+> model.
  std::optional<double> r_closed_form;
  bool ok = true;
};

struct BoundaryOptions {
  double lo = 1e-2;
  double hi = 1e4;
  int scan_points = 241;
  double threshold = 1e-9;
  double bisection_tol = 1e-6;
  double tol = 1e-10;
  int workers = 0;
};

/// Smallest r/gamma with negativity above `threshold`: log scan for the first
/// entangled point, then bisection. nullopt when the scan never crosses.
std::optional<double> find_boundary(const ModelConfig& base, double g, const BoundaryOptions& options);

/// True when `config` is the two-qubit Ising model with dephasing and |+> reset
/// covered by the closed forms.
bool is_ising_dephasing_2q(const ModelConfig& config);

std::vector<BoundaryRow> run_boundary(const ModelConfig& base, const std::vector<double>& g_values,
                                      const BoundaryOptions& options);

void write_boundary_csv(std::ostream& out, const std::vector<BoundaryRow>& rows);

struct Fig2aRow {
  double r = 0.0;
  double negativity_s0 = 0.0;
  double negativity_s05 = 0.0;
  bool ok = true;
};

/// XYZ + field model at g = 10 gamma_ref.
std::vector<Fig2aRow> run_fig2a(const std::vector<double>& r_values, const SweepOptions& options);
void write_fig2a_csv(std::ostream& out, const std::vector<Fig2aRow>& rows);

struct Fig2bRow {
  double r = 0.0;
  double avg_negativity_5q = 0.0;
  double pair_negativity_5q = 0.0;
  double pair_negativity_poisson = 0.0;
  bool ok = true;
};

/// All-pairs Ising at g = 5 gamma with dephasing and |+> reset; the Poisson
/// curve mixes the pair states of the N = n_min..n_max steady states.
std::vector<Fig2bRow> run_fig2b(const std::vector<double>& r_values, double lambda,
                                const SweepOptions& options);
void write_fig2b_csv(std::ostream& out, const std::vector<Fig2bRow>& rows);

struct SpectrumDump {
  std::vector<Complex> eigenvalues;  ///< sorted
  double gap = 0.0;                  ///< min |Re| over eigenvalues away from 0
};

SpectrumDump run_spectrum(const ModelConfig& config);
void write_spectrum_csv(std::ostream& out, const SpectrumDump& dump);

/// Shortest decimal text that reads back to the same double; "nan" for NaN.
std::string format_number(double v);

}  // namespace steadyent
