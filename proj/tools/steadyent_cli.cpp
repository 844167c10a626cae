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


// steadyent command-line front end. All rates are in units of gamma (the
// dephasing rate, or 1 for general noise); see docs/config.md.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "steadyent/config_io.hpp"
#include "steadyent/errors.hpp"
#include "steadyent/liouvillian.hpp"
#include "steadyent/sweep.hpp"

#ifndef STEADYENT_VERSION
#define STEADYENT_VERSION "0.0.0"
#endif

namespace {

using namespace steadyent;

enum ExitCode { kOk = 0, kInvalid = 1, kSolverFailure = 2, kIoFailure = 3 };

struct Common {
  std::string out = "-";
  std::string json;
  int workers = 0;
  double tol = 1e-10;
  bool deterministic = false;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--out", c.out, "Output CSV path, '-' for stdout")->capture_default_str();
  cmd->add_option("--json", c.json, "Also write a JSON provenance envelope to this path");
  cmd->add_option("--workers", c.workers, "Worker threads (0 = number of processors)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--tol", c.tol, "Steady-state residual tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_flag("--deterministic", c.deterministic, "Write 0 for wall times (byte-stable output)");
}

template <typename Writer>
void emit(const std::string& path, Writer&& write) {
  if (path == "-") {
    write(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  write(out);
  if (!out) throw IoError("write failed for " + path);
}

void emit_envelope(const Common& c, const std::string& command, nlohmann::json params,
                   const std::string& config_text, std::size_t failures) {
  if (c.json.empty()) return;
  nlohmann::json doc = {{"tool", "steadyent"},
                        {"version", STEADYENT_VERSION},
                        {"command", command},
                        {"parameters", std::move(params)},
                        {"output", c.out},
                        {"failures", failures}};
  if (!config_text.empty()) doc["config"] = config_text;
  emit(c.json, [&](std::ostream& out) { out << doc.dump(2) << '\n'; });
}

// Every config passes validation on load; this adds the complete-positivity
// check at the largest requested rates before any solve.
void preflight(const ModelConfig& config) {
  const auto check = check_lindblad(config);
  if (!check.passed) {
    std::ostringstream msg;
    msg << "generator is not of Lindblad form (min Choi eigenvalue " << check.min_choi_eigenvalue
        << ")";
    throw ValidationError("config", msg.str());
  }
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> values;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || item.find_first_not_of(" \t", used) != std::string::npos)
      throw ArgumentError("bad number '" + item + "' in list");
    values.push_back(v);
  }
  if (values.empty()) throw ArgumentError("empty value list");
  return values;
}

int report_failures(std::size_t failures, std::size_t total) {
  if (failures == 0) return kOk;
  std::cerr << failures << " of " << total << " grid points failed (marked nan)\n";
  return kSolverFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Steady states and entanglement of reset-driven qubit networks"};
  app.set_version_flag("--version", STEADYENT_VERSION);
  app.require_subcommand(1);

  std::string config_path;
  Common common;
  std::string g_range = "0.1:20:50";
  std::string r_range;
  std::string g_values;
  double lambda = 4.0;

  auto* sweep = app.add_subcommand("sweep", "Negativity over a (g/gamma, r/gamma) grid");
  sweep->add_option("--config", config_path, "Model config file")->required();
  sweep->add_option("--g-range", g_range, "lo:hi:steps[:log|lin]")->capture_default_str();
  sweep->add_option("--r-range", r_range, "lo:hi:steps[:log|lin]")->default_str("0.1:20:50");
  add_common(sweep, common);

  auto* boundary = app.add_subcommand("boundary", "Smallest entangling r/gamma for each g/gamma");
  boundary->add_option("--config", config_path, "Model config file")->required();
  auto* g_list = boundary->add_option("--g-values", g_values, "Comma-separated g/gamma values");
  boundary->add_option("--g-range", g_range, "lo:hi:steps[:log|lin]")->excludes(g_list);
  add_common(boundary, common);

  auto* fig2a = app.add_subcommand("fig2a", "XYZ + field model, s = 0 and s = 1/2 curves");
  fig2a->add_option("--r-range", r_range, "lo:hi:steps[:log|lin]")->default_str("0.01:1e4:121");
  add_common(fig2a, common);

  auto* fig2b = app.add_subcommand("fig2b", "Five-qubit Ising and Poisson-mixture curves");
  fig2b->add_option("--r-range", r_range, "lo:hi:steps[:log|lin]")->default_str("0.1:1e5:49");
  fig2b->add_option("--lambda", lambda, "Poisson mean of the particle number")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_common(fig2b, common);

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Sorted generator eigenvalues");
  spectrum_cmd->add_option("--config", config_path, "Model config file")->required();
  add_common(spectrum_cmd, common);

  auto* validate_cmd = app.add_subcommand("validate", "Check a config and print its canonical form");
  validate_cmd->add_option("--config", config_path, "Model config file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (*validate_cmd) {
      const ModelConfig config = load_config(config_path);
      preflight(config);
      std::cout << format_config(config);
      return kOk;
    }

    SweepOptions options{common.tol, common.workers, common.deterministic};

    if (*sweep) {
      const ModelConfig base = load_config(config_path);
      if (base.n_qubits < 2) throw ValidationError("system.n_qubits", "sweeps need at least two qubits");
      const auto gs = Axis::parse(g_range).values();
      const auto rs = Axis::parse(r_range.empty() ? "0.1:20:50" : r_range).values();
      preflight(with_reduced_rates(base, gs.back(), rs.back()));
      const auto rows = run_sweep(base, gs, rs, options);
      emit(common.out, [&](std::ostream& out) { write_sweep_csv(out, rows); });
      const auto failures = static_cast<std::size_t>(
          std::count_if(rows.begin(), rows.end(), [](const auto& r) { return !r.ok; }));
      emit_envelope(common, "sweep", {{"g_range", g_range}, {"r_range", r_range}, {"tol", common.tol}},
                    format_config(base), failures);
      return report_failures(failures, rows.size());
    }

    if (*boundary) {
      const ModelConfig base = load_config(config_path);
      if (base.n_qubits < 2) throw ValidationError("system.n_qubits", "boundaries need at least two qubits");
      const auto gs = g_values.empty() ? Axis::parse(g_range).values() : parse_list(g_values);
      BoundaryOptions bopt;
      bopt.tol = common.tol;
      bopt.workers = common.workers;
      preflight(with_reduced_rates(base, *std::max_element(gs.begin(), gs.end()), bopt.hi));
      const auto rows = run_boundary(base, gs, bopt);
      emit(common.out, [&](std::ostream& out) { write_boundary_csv(out, rows); });
      const auto failures = static_cast<std::size_t>(
          std::count_if(rows.begin(), rows.end(), [](const auto& r) { return !r.ok; }));
      emit_envelope(common, "boundary", {{"g_values", gs}}, format_config(base), failures);
      return report_failures(failures, rows.size());
    }

    if (*fig2a) {
      const auto rs = Axis::parse(r_range.empty() ? "0.01:1e4:121" : r_range).values();
      for (double s : {0.0, 0.5}) preflight(validate(xyz_field_preset(10.0, rs.back(), s)));
      const auto rows = run_fig2a(rs, options);
      emit(common.out, [&](std::ostream& out) { write_fig2a_csv(out, rows); });
      const auto failures = static_cast<std::size_t>(
          std::count_if(rows.begin(), rows.end(), [](const auto& r) { return !r.ok; }));
      emit_envelope(common, "fig2a", {{"r_range", r_range}, {"g_over_gamma", 10.0}},
                    format_config(xyz_field_preset(10.0, 1.0, 0.0)), failures);
      return report_failures(failures, rows.size());
    }

    if (*fig2b) {
      const auto rs = Axis::parse(r_range.empty() ? "0.1:1e5:49" : r_range).values();
      for (int n = 2; n <= 6; ++n) preflight(validate(symmetric_ising(n, 5.0, 1.0, rs.back())));
      const auto rows = run_fig2b(rs, lambda, options);
      emit(common.out, [&](std::ostream& out) { write_fig2b_csv(out, rows); });
      const auto failures = static_cast<std::size_t>(
          std::count_if(rows.begin(), rows.end(), [](const auto& r) { return !r.ok; }));
      emit_envelope(common, "fig2b",
                    {{"r_range", r_range}, {"lambda", lambda}, {"g_over_gamma", 5.0}},
                    format_config(symmetric_ising(5, 5.0, 1.0, 1.0)), failures);
      return report_failures(failures, rows.size());
    }

    if (*spectrum_cmd) {
      const ModelConfig config = load_config(config_path);
      preflight(config);
      const auto dump = run_spectrum(config);
      emit(common.out, [&](std::ostream& out) { write_spectrum_csv(out, dump); });
      std::cerr << "spectral_gap " << format_number(dump.gap) << '\n';
      emit_envelope(common, "spectrum", {{"spectral_gap", dump.gap}}, format_config(config), 0);
      return kOk;
    }
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << '\n';
    return kInvalid;
  } catch (const ArgumentError& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return kInvalid;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kIoFailure;
  } catch (const std::exception& e) {
    std::cerr << "solver error: " << e.what() << '\n';
    return kSolverFailure;
  }
  return kOk;
}
