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

#include "braidq/cli/output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>

namespace braidq::cli {

std::string fmt_num(double x) {
  if (x == 0.0) return "0";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", kSignificantDigits, x);
  return buf;
}

std::string fmt_signed(double x) {
  if (x == 0.0) return "+0";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%+.*g", kSignificantDigits, x);
  return buf;
}

std::string fmt_amplitude(Complex z, double tolerance) {
  const double re = chop(z.real(), tolerance);
  const double im = chop(z.imag(), tolerance);
  if (im == 0.0) return fmt_signed(re);
  return fmt_signed(re) + fmt_signed(im) + "j";
}

double chop(double x, double eps) { return std::abs(x) <= eps ? 0.0 : x; }

nlohmann::ordered_json json_num(double x) {
  if (x == 0.0) return 0.0;
  return std::strtod(fmt_num(x).c_str(), nullptr);
}

nlohmann::ordered_json json_array(const std::vector<double>& xs) {
  auto arr = nlohmann::ordered_json::array();
  for (double x : xs) arr.push_back(json_num(x));
  return arr;
}

std::string join_nums(const std::vector<double>& xs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += fmt_num(xs[i]);
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

Table::Table(std::vector<std::string> header) : header_(std::move(header)) {}

void Table::add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

void Table::print(std::ostream& out) const {
  std::vector<std::size_t> width(header_.size(), 0);
  auto grow = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size() && c < width.size(); ++c)
      width[c] = std::max(width[c], row[c].size());
  };
  grow(header_);
  for (const auto& r : rows_) grow(r);
  auto emit = [&](const std::vector<std::string>& row) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    out << line << '\n';
  };
  emit(header_);
  for (const auto& r : rows_) emit(r);
}

}  // namespace braidq::cli
