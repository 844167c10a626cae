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


#include "steadyent/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <exception>
#include <limits>
#include <map>
#include <mutex>
#include <thread>

#include "steadyent/analytic2q.hpp"
#include "steadyent/entanglement.hpp"
#include "steadyent/errors.hpp"
#include "steadyent/solver.hpp"

namespace steadyent {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double parse_number(std::string_view s, std::string_view what) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw ArgumentError("bad " + std::string(what) + " '" + std::string(s) + "'");
  return v;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

Axis Axis::parse(std::string_view text) {
  std::vector<std::string_view> parts;
  for (std::size_t start = 0;;) {
    const auto pos = text.find(':', start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  if (parts.size() < 3 || parts.size() > 4)
    throw ArgumentError("range must look like lo:hi:steps[:log|lin], got '" + std::string(text) + "'");
  Axis a;
  a.lo = parse_number(parts[0], "range start");
  a.hi = parse_number(parts[1], "range end");
  const double steps = parse_number(parts[2], "step count");
  if (steps < 1 || steps != std::floor(steps) || steps > 1e6)
    throw ArgumentError("step count must be a positive integer");
  a.steps = static_cast<int>(steps);
  if (parts.size() == 4) {
    if (parts[3] == "log") a.log = true;
    else if (parts[3] == "lin") a.log = false;
    else throw ArgumentError("spacing must be 'log' or 'lin'");
  }
  if (!std::isfinite(a.lo) || !std::isfinite(a.hi)) throw ArgumentError("range must be finite");
  if (a.steps > 1 && !(a.lo < a.hi)) throw ArgumentError("range needs lo < hi");
  if (a.log && a.lo <= 0.0) throw ArgumentError("log range needs lo > 0");
  if (a.lo < 0.0) throw ArgumentError("rates must be >= 0");
  return a;
}

std::vector<double> Axis::values() const {
  if (steps == 1) return {lo};
  std::vector<double> v(static_cast<std::size_t>(steps));
  for (int k = 0; k < steps; ++k) {
    const double t = static_cast<double>(k) / (steps - 1);
    v[k] = log ? std::exp(std::log(lo) + t * (std::log(hi) - std::log(lo))) : lo + t * (hi - lo);
  }
  v.front() = lo;
  v.back() = hi;
  return v;
}

void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& fn) {
  std::size_t n = workers > 0 ? static_cast<std::size_t>(workers)
                              : std::max(1u, std::thread::hardware_concurrency());
  n = std::min(n, count);
  if (n <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t k = 0; k < n; ++k) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

double pair_negativity(const DensityMatrix& rho) {
  if (rho.n_qubits() < 2) throw ArgumentError("pair negativity needs at least two qubits");
  const Bipartition first(2, {1});
  if (rho.n_qubits() == 2) return negativity(rho, first);
  return negativity(reduced_pair(rho, 1, 2), first);
}

std::vector<SweepRow> run_sweep(const ModelConfig& base, const std::vector<double>& g_values,
                                const std::vector<double>& r_values, const SweepOptions& options) {
  std::vector<SweepRow> rows(g_values.size() * r_values.size());
  parallel_for(rows.size(), options.workers, [&](std::size_t k) {
    SweepRow& row = rows[k];
    row.g = g_values[k / r_values.size()];
    row.r = r_values[k % r_values.size()];
    const auto t0 = std::chrono::steady_clock::now();
    try {
      const auto result = steady_state(with_reduced_rates(base, row.g, row.r), options.tol);
      row.negativity = pair_negativity(result.state);
      if (base.n_qubits >= 3) row.avg_negativity = average_negativity(result.state);
      row.residual = result.residual;
    } catch (const std::exception& e) {
      row.ok = false;
      row.error = e.what();
      row.negativity = row.residual = kNaN;
      if (base.n_qubits >= 3) row.avg_negativity = kNaN;
    }
    row.wall_time = options.deterministic ? 0.0 : seconds_since(t0);
  });
  return rows;
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  const bool avg = !rows.empty() && rows.front().avg_negativity.has_value();
  out << "g_over_gamma,r_over_gamma,negativity" << (avg ? ",avg_negativity" : "")
      << ",residual,wall_time_s\n";
  for (const auto& row : rows) {
    out << format_number(row.g) << ',' << format_number(row.r) << ','
        << format_number(row.negativity);
    if (avg) out << ',' << format_number(row.avg_negativity.value_or(kNaN));
    out << ',' << format_number(row.residual) << ',' << format_number(row.wall_time) << '\n';
  }
}

std::optional<double> find_boundary(const ModelConfig& base, double g, const BoundaryOptions& options) {
  auto entangled = [&](double r) {
    const auto result = steady_state(with_reduced_rates(base, g, r), options.tol);
    return pair_negativity(result.state) > options.threshold;
  };
  const Axis scan{options.lo, options.hi, options.scan_points, true};
  const auto rs = scan.values();
  std::size_t first = rs.size();
  for (std::size_t k = 0; k < rs.size(); ++k) {
    if (entangled(rs[k])) {
      first = k;
      break;
    }
  }
  if (first == rs.size() || first == 0) return std::nullopt;
  double lo = rs[first - 1];
  double hi = rs[first];
  while (hi - lo > options.bisection_tol) {
    const double mid = 0.5 * (lo + hi);
    (entangled(mid) ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

bool is_ising_dephasing_2q(const ModelConfig& config) {
  if (config.n_qubits != 2 || !std::holds_alternative<DephasingParams>(config.noise)) return false;
  const auto& terms = config.hamiltonian.terms;
  if (terms.size() != 1 || terms[0].word != "ZZ" || terms[0].coefficient != 1.0) return false;
  const Eigen::Matrix2cd plus = named_state("plus");
  for (const auto& chi : config.reset.chi)
    if ((chi - plus).norm() > 1e-14) return false;
  return true;
}

std::vector<BoundaryRow> run_boundary(const ModelConfig& base, const std::vector<double>& g_values,
                                      const BoundaryOptions& options) {
  const bool closed_form = is_ising_dephasing_2q(base);
  std::vector<BoundaryRow> rows(g_values.size());
  parallel_for(rows.size(), options.workers, [&](std::size_t k) {
    BoundaryRow& row = rows[k];
    row.g = g_values[k];
    if (closed_form && row.g > 1.0) row.r_closed_form = analytic2q::threshold_r(row.g);
    try {
      row.r_star = find_boundary(base, row.g, options);
    } catch (const SolverError&) {
      row.ok = false;
    }
  });
  return rows;
}

void write_boundary_csv(std::ostream& out, const std::vector<BoundaryRow>& rows) {
  const bool closed_form = std::any_of(rows.begin(), rows.end(),
                                       [](const auto& row) { return row.r_closed_form.has_value(); });
  out << "g_over_gamma,r_star" << (closed_form ? ",r_star_closed_form" : "") << '\n';
  auto cell = [](const std::optional<double>& v) { return v ? format_number(*v) : "not_found"; };
  for (const auto& row : rows) {
    out << format_number(row.g) << ',' << (row.ok ? cell(row.r_star) : "nan");
    if (closed_form) out << ',' << cell(row.r_closed_form);
    out << '\n';
  }
}

std::vector<Fig2aRow> run_fig2a(const std::vector<double>& r_values, const SweepOptions& options) {
  std::vector<Fig2aRow> rows(r_values.size());
  parallel_for(rows.size(), options.workers, [&](std::size_t k) {
    Fig2aRow& row = rows[k];
    row.r = r_values[k];
    try {
      row.negativity_s0 = pair_negativity(
          steady_state(xyz_field_preset(10.0, row.r, 0.0), options.tol).state);
      row.negativity_s05 = pair_negativity(
          steady_state(xyz_field_preset(10.0, row.r, 0.5), options.tol).state);
    } catch (const SolverError&) {
      row.ok = false;
      row.negativity_s0 = row.negativity_s05 = kNaN;
    }
  });
  return rows;
}

void write_fig2a_csv(std::ostream& out, const std::vector<Fig2aRow>& rows) {
  out << "r_over_gamma,negativity_s0,negativity_s05\n";
  for (const auto& row : rows)
    out << format_number(row.r) << ',' << format_number(row.negativity_s0) << ','
        << format_number(row.negativity_s05) << '\n';
}

std::vector<Fig2bRow> run_fig2b(const std::vector<double>& r_values, double lambda,
                                const SweepOptions& options) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw ArgumentError("lambda must be > 0");
  const MixtureSpec mixture{2, 6, lambda};
  std::vector<Fig2bRow> rows(r_values.size());
  parallel_for(rows.size(), options.workers, [&](std::size_t k) {
    Fig2bRow& row = rows[k];
    row.r = r_values[k];
    try {
      std::map<int, DensityMatrix> pairs;
      for (int n = mixture.n_min; n <= mixture.n_max; ++n) {
        const auto result = steady_state(symmetric_ising(n, 5.0, 1.0, row.r), options.tol);
        if (n == 5) {
          row.avg_negativity_5q = average_negativity(result.state);
          row.pair_negativity_5q = pair_negativity(result.state);
        }
        pairs.emplace(n, n == 2 ? result.state : reduced_pair(result.state, 1, 2));
      }
      row.pair_negativity_poisson = pair_negativity(poisson_mixture(pairs, mixture));
    } catch (const SolverError&) {
      row.ok = false;
      row.avg_negativity_5q = row.pair_negativity_5q = row.pair_negativity_poisson = kNaN;
    }
  });
  return rows;
}

void write_fig2b_csv(std::ostream& out, const std::vector<Fig2bRow>& rows) {
  out << "r_over_gamma,avg_negativity_5q,pair_negativity_5q,pair_negativity_poisson\n";
  for (const auto& row : rows)
    out << format_number(row.r) << ',' << format_number(row.avg_negativity_5q) << ','
        << format_number(row.pair_negativity_5q) << ',' << format_number(row.pair_negativity_poisson)
        << '\n';
}

SpectrumDump run_spectrum(const ModelConfig& config) {
  SpectrumDump dump;
  dump.eigenvalues = spectrum(config);
  double scale = 1.0;
  for (const auto& z : dump.eigenvalues) scale = std::max(scale, std::abs(z));
  const double zero_tol = 1e-9 * scale;
  for (auto& z : dump.eigenvalues) {
    if (std::abs(z.real()) <= zero_tol) z.real(0.0);
    if (std::abs(z.imag()) <= zero_tol) z.imag(0.0);
  }
  sort_spectrum(dump.eigenvalues, zero_tol);
  dump.gap = std::numeric_limits<double>::infinity();
  for (const auto& z : dump.eigenvalues)
    if (std::abs(z) > zero_tol) dump.gap = std::min(dump.gap, std::abs(z.real()));
  return dump;
}

void write_spectrum_csv(std::ostream& out, const SpectrumDump& dump) {
  out << "re,im\n";
  for (const auto& z : dump.eigenvalues)
    out << format_number(z.real()) << ',' << format_number(z.imag()) << '\n';
}

}  // namespace steadyent
