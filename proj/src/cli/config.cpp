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

#include "braidq/cli/config.hpp"

#include <fstream>

#include "braidq/errors.hpp"
#include "braidq/linalg.hpp"

namespace braidq::cli {

OutputFormat parse_format(const std::string& name) {
  if (name == "table") return OutputFormat::kTable;
  if (name == "json-lines" || name == "jsonl" || name == "json") return OutputFormat::kJsonLines;
  if (name == "csv") return OutputFormat::kCsv;
  throw ArgumentError("unknown output format '" + name + "' (table, json-lines, csv)");
}

std::string to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::kTable:
      return "table";
    case OutputFormat::kJsonLines:
      return "json-lines";
    case OutputFormat::kCsv:
      return "csv";
  }
  return "table";
}

void RunConfig::validate() const {
  if (!(tol_construction > 0.0)) throw ArgumentError("tol_construction must be positive");
  if (!(tol_eigen > 0.0)) throw ArgumentError("tol_eigen must be positive");
  if (!(ppt_threshold < 0.0)) throw ArgumentError("ppt_threshold must be negative");
  if (dense_cap < 2) throw ArgumentError("dense_cap must be at least 2");
  if (matrix_free_cap < 2) throw ArgumentError("matrix_free_cap must be at least 2");
  if (dense_cap > kDefaultMaxQubits || matrix_free_cap > kDefaultMaxQubits) {
    throw ArgumentError("caps may not exceed " + std::to_string(kDefaultMaxQubits) + " qubits");
  }
}

void RunConfig::merge(const nlohmann::json& j) {
  if (!j.is_object()) throw ArgumentError("config must be a JSON object");
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "tol_construction") {
        tol_construction = value.get<double>();
      } else if (key == "tol_eigen") {
        tol_eigen = value.get<double>();
      } else if (key == "ppt_threshold") {
        ppt_threshold = value.get<double>();
      } else if (key == "dense_cap") {
        dense_cap = value.get<int>();
      } else if (key == "matrix_free_cap") {
        matrix_free_cap = value.get<int>();
      } else if (key == "seed") {
        seed = value.get<std::uint64_t>();
      } else if (key == "format") {
        format = parse_format(value.get<std::string>());
      } else {
        throw ArgumentError("unknown config key '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError(std::string("bad config value: ") + e.what());
  }
}

RunConfig load_config_file(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open config file '" + path + "'");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ArgumentError("config file '" + path + "' is not valid JSON: " + e.what());
  }
  base.merge(j);
  return base;
}

}  // namespace braidq::cli
