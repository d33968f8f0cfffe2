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

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "braidq/linalg.hpp"

namespace braidq::cli {

/// Machine output carries 12 significant digits.
inline constexpr int kSignificantDigits = 12;

/// %.12g, with negative zero printed as "0".
std::string fmt_num(double x);
/// As fmt_num but always signed: "+0.5", "-0.5".
std::string fmt_signed(double x);
/// "re" for real values, "re+imj" otherwise.
std::string fmt_amplitude(Complex z, double tolerance);

/// Zeroes |x| <= eps.
double chop(double x, double eps);

/// Value rounded to 12 significant digits, for JSON records.
nlohmann::ordered_json json_num(double x);
nlohmann::ordered_json json_array(const std::vector<double>& xs);

std::string join_nums(const std::vector<double>& xs, const std::string& sep);
std::string csv_field(const std::string& s);

/// Left-aligned text columns separated by two spaces.
class Table {
 public:
  explicit Table(std::vector<std::string> header);
  void add(std::vector<std::string> row);
  void print(std::ostream& out) const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

}  // namespace braidq::cli
