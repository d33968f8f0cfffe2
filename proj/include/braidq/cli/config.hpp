// Copyright 2026 The braidq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

namespace braidq::cli {

enum class OutputFormat { kTable, kJsonLines, kCsv };

OutputFormat parse_format(const std::string& name);
std::string to_string(OutputFormat f);

/// Environment variable naming a JSON config file.
inline constexpr const char* kConfigEnv = "BRAIDQ_CONFIG";

/// Run-wide settings. A config file uses the same field names:
///   {"tol_construction": 1e-12, "tol_eigen": 1e-9, "ppt_threshold": -1e-10,
///    "dense_cap": 12, "matrix_free_cap": 20, "seed": 1, "format": "table"}
struct RunConfig {
  double tol_construction = 1e-12;
  double tol_eigen = 1e-9;
  double ppt_threshold = -1e-10;
  int dense_cap = 12;
  int matrix_free_cap = 20;
  std::uint64_t seed = 1;
  OutputFormat format = OutputFormat::kTable;

  /// Throws ArgumentError when caps or tolerances have the wrong sign.
  void validate() const;

  /// Overlays fields present in j; unknown keys are rejected.
  void merge(const nlohmann::json& j);
};

RunConfig load_config_file(const std::string& path, RunConfig base = {});

}  // namespace braidq::cli
