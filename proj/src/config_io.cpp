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


#include "steadyent/config_io.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "steadyent/errors.hpp"

namespace steadyent {
namespace {

namespace pt = boost::property_tree;

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto pos = s.find(sep, start);
    const auto end = pos == std::string_view::npos ? s.size() : pos;
    std::string piece = trim(s.substr(start, end - start));
    if (!piece.empty()) out.push_back(std::move(piece));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<std::string> words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

double to_double(const std::string& text, const std::string& field) {
  const std::string t = trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty())
    throw ValidationError(field, "expected a real number, got '" + text + "'");
  return v;
}

int to_int(const std::string& text, const std::string& field) {
  const std::string t = trim(text);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty())
    throw ValidationError(field, "expected an integer, got '" + text + "'");
  return v;
}

// Flat view of one section with usage tracking, so leftovers can be reported.
class Section {
 public:
  Section(std::string name, const pt::ptree* tree) : name_(std::move(name)) {
    if (!tree) return;
    for (const auto& [key, child] : *tree) {
      if (!child.empty()) throw ValidationError(name_ + "." + key, "nested keys are not allowed");
      values_[key] = child.data();
    }
  }

  std::string field(const std::string& key) const { return name_ + "." + key; }

  std::optional<std::string> take(const std::string& key) {
    auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    std::string v = it->second;
    values_.erase(it);
    return v;
  }
  std::string require(const std::string& key) {
    auto v = take(key);
    if (!v) throw ValidationError(field(key), "missing");
    return *v;
  }
  double number(const std::string& key) { return to_double(require(key), field(key)); }
  double number_or(const std::string& key, double fallback) {
    auto v = take(key);
    return v ? to_double(*v, field(key)) : fallback;
  }

  /// Keys of the form `prefix.K`, removed from the section.
  std::map<int, std::string> take_indexed(const std::string& prefix) {
    std::map<int, std::string> out;
    for (auto it = values_.begin(); it != values_.end();) {
      const std::string& key = it->first;
      if (key.size() > prefix.size() + 1 && key.compare(0, prefix.size() + 1, prefix + ".") == 0) {
        out[to_int(key.substr(prefix.size() + 1), field(key))] = it->second;
        it = values_.erase(it);
      } else {
        ++it;
      }
    }
    return out;
  }

  void finish() const {
    if (!values_.empty()) throw ValidationError(field(values_.begin()->first), "unknown key");
  }

 private:
  std::string name_;
  std::map<std::string, std::string> values_;
};

std::vector<std::pair<int, int>> parse_pairs(const std::string& text, int n, const std::string& field) {
  if (trim(text) == "all") return all_pairs(n);
  std::vector<std::pair<int, int>> pairs;
  for (const auto& w : words(text)) {
    const auto dash = w.find('-');
    if (dash == std::string::npos) throw ValidationError(field, "expected i-j, got '" + w + "'");
    pairs.emplace_back(to_int(w.substr(0, dash), field), to_int(w.substr(dash + 1), field));
  }
  return pairs;
}

std::vector<PauliTerm> parse_terms(const std::string& text, const std::string& field) {
  std::vector<PauliTerm> terms;
  for (const auto& item : split(text, ';')) {
    const auto w = words(item);
    if (w.size() != 2) throw ValidationError(field, "expected '<coefficient> <word>', got '" + item + "'");
    if (w[0].find_first_of("ij") != std::string::npos)
      throw ValidationError(field, "complex coefficients are not supported");
    terms.push_back({to_double(w[0], field), w[1]});
  }
  if (terms.empty()) throw ValidationError(field, "no terms");
  return terms;
}

HamiltonianSpec parse_hamiltonian(Section& sec, int n) {
  const std::string model = trim(sec.take("model").value_or("ising"));
  const double g = sec.number("g");
  HamiltonianSpec h;
  if (model == "ising") {
    h = ising(g, parse_pairs(sec.take("pairs").value_or("all"), n, sec.field("pairs")), n);
  } else if (model == "pauli") {
    h = HamiltonianSpec{n, g, parse_terms(sec.require("terms"), sec.field("terms"))};
  } else if (model == "heisenberg" || model == "xyz_field" || model == "xx") {
    if (n != 2) throw ValidationError(sec.field("model"), "'" + model + "' is a two-qubit model");
    h = model == "heisenberg" ? heisenberg(g) : model == "xx" ? xx_coupling(g) : xyz_field(g);
  } else {
    throw ValidationError(sec.field("model"), "unknown model '" + model + "'");
  }
  sec.finish();
  return h;
}

Noise parse_noise(Section& sec) {
  const std::string type = trim(sec.take("type").value_or("dephasing"));
  Noise noise;
  if (type == "dephasing") {
    noise = DephasingParams{sec.number("gamma")};
  } else if (type == "general") {
    noise = NoiseParams{sec.number("B"), sec.number("C"), sec.number_or("s", 0.5)};
  } else {
    throw ValidationError(sec.field("type"), "unknown noise type '" + type + "'");
  }
  sec.finish();
  return noise;
}

Eigen::Matrix2cd parse_bloch(const std::string& text, const std::string& field) {
  const auto w = words(text);
  if (w.size() != 3) throw ValidationError(field, "expected three components");
  const Eigen::Vector3d v(to_double(w[0], field), to_double(w[1], field), to_double(w[2], field));
  if (v.norm() > 1.0 + 1e-12) throw ValidationError(field, "Bloch vector longer than 1");
  return bloch_state(v);
}

Eigen::Matrix2cd parse_named(const std::string& name, double mix, const std::string& field) {
  try {
    return named_state(trim(name), mix);
  } catch (const std::exception& e) {
    throw ValidationError(field, e.what());
  }
}

ResetSpec parse_reset(Section& sec, int n) {
  ResetSpec reset;
  reset.r = sec.number_or("r", 0.0);
  const double mix = sec.number_or("mix", 0.0);
  const auto state = sec.take("state");
  const auto bloch = sec.take("bloch");
  if (state && bloch) throw ValidationError(sec.field("bloch"), "give either state or bloch");
  Eigen::Matrix2cd chi = bloch ? parse_bloch(*bloch, sec.field("bloch"))
                               : parse_named(state.value_or("plus"), mix, sec.field("state"));
  reset.chi.assign(static_cast<std::size_t>(n), chi);

  auto apply_sites = [&](const std::map<int, std::string>& entries, const std::string& prefix,
                         bool is_bloch) {
    for (const auto& [site, text] : entries) {
      const std::string field = sec.field(prefix + "." + std::to_string(site));
      if (site < 1 || site > n) throw ValidationError(field, "site out of range");
      reset.chi[site - 1] = is_bloch ? parse_bloch(text, field) : parse_named(text, mix, field);
    }
  };
  const auto site_states = sec.take_indexed("state");
  const auto site_blochs = sec.take_indexed("bloch");
  for (const auto& [site, _] : site_states)
    if (site_blochs.count(site))
      throw ValidationError(sec.field("bloch." + std::to_string(site)), "give either state or bloch");
  apply_sites(site_states, "state", false);
  apply_sites(site_blochs, "bloch", true);
  sec.finish();
  return reset;
}

std::string fmt(double v) {
  std::ostringstream out;
  out.precision(17);
  out << v;
  return out.str();
}

}  // namespace

ModelConfig parse_config(std::string_view text) {
  pt::ptree tree;
  try {
    std::istringstream in{std::string(text)};
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ValidationError("config", "line " + std::to_string(e.line()) + ": " + e.message());
  }
  static const std::set<std::string> kSections = {"system", "hamiltonian", "noise", "reset"};
  for (const auto& [name, child] : tree) {
    if (!kSections.count(name)) throw ValidationError(name, "unknown section");
    if (child.empty() && !child.data().empty())
      throw ValidationError(name, "key outside of a section");
  }
  auto section = [&](const std::string& name) {
    return Section(name, tree.get_child_optional(name).get_ptr());
  };

  Section system = section("system");
  ModelConfig config;
  config.n_qubits = to_int(system.take("n_qubits").value_or("2"), "system.n_qubits");
  system.finish();
  if (config.n_qubits < 1 || config.n_qubits > kMaxQubits)
    throw ValidationError("system.n_qubits", "must be in 1.." + std::to_string(kMaxQubits));

  if (!tree.get_child_optional("hamiltonian")) throw ValidationError("hamiltonian", "missing section");
  Section ham = section("hamiltonian");
  config.hamiltonian = parse_hamiltonian(ham, config.n_qubits);
  Section noise = section("noise");
  config.noise = tree.get_child_optional("noise") ? parse_noise(noise) : Noise{DephasingParams{0.0}};
  Section reset = section("reset");
  config.reset = parse_reset(reset, config.n_qubits);
  return validate(std::move(config));
}

ModelConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string format_config(const ModelConfig& config) {
  std::ostringstream out;
  out << "[system]\nn_qubits = " << config.n_qubits << "\n\n";
  out << "[hamiltonian]\nmodel = pauli\ng = " << fmt(config.hamiltonian.g) << "\nterms = ";
  for (std::size_t k = 0; k < config.hamiltonian.terms.size(); ++k) {
    const auto& t = config.hamiltonian.terms[k];
    out << (k ? "; " : "") << fmt(t.coefficient) << ' ' << t.word;
  }
  out << "\n\n[noise]\n";
  if (const auto* d = std::get_if<DephasingParams>(&config.noise)) {
    out << "type = dephasing\ngamma = " << fmt(d->gamma) << "\n";
  } else {
    const auto& p = std::get<NoiseParams>(config.noise);
    out << "type = general\nB = " << fmt(p.B) << "\nC = " << fmt(p.C) << "\ns = " << fmt(p.s) << "\n";
  }
  out << "\n[reset]\nr = " << fmt(config.reset.r) << "\n";
  for (std::size_t i = 0; i < config.reset.chi.size(); ++i) {
    const Eigen::Vector3d b = bloch_vector(config.reset.chi[i]);
    out << "bloch." << i + 1 << " = " << fmt(b.x()) << ' ' << fmt(b.y()) << ' ' << fmt(b.z()) << "\n";
  }
  return out.str();
}

void save_config(const ModelConfig& config, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  out << format_config(config);
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace steadyent
