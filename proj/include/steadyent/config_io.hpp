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


// Text configuration for ModelConfig: INI-style sections [system],
// [hamiltonian], [noise], [reset]. See docs/config.md for the schema.

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "steadyent/models.hpp"

namespace steadyent {

/// Parses and validates. Unknown sections or keys, malformed numbers and
/// invariant violations all raise ValidationError with a `section.key` field.
ModelConfig parse_config(std::string_view text);

/// Throws IoError when the file cannot be read.
ModelConfig load_config(const std::filesystem::path& path);

/// Canonical form: Hamiltonian as explicit Pauli terms, reset states as Bloch
/// vectors per site, all numbers with round-trip precision.
std::string format_config(const ModelConfig& config);

void save_config(const ModelConfig& config, const std::filesystem::path& path);

}  // namespace steadyent
