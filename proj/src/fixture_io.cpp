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

#include "braidq/fixture_io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "braidq/errors.hpp"

namespace braidq {

namespace {

// Line numbers are reported through ParseError::position (0-based line).
std::vector<std::string> split_spaces(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

std::size_t parse_count(const std::string& tok, std::size_t line) {
  char* end = nullptr;
  errno = 0;
  const long long v = std::strtoll(tok.c_str(), &end, 10);
  if (errno != 0 || end == tok.c_str() || *end != '\0' || v <= 0) {
    throw ParseError("expected a positive integer, got '" + tok + "'", line);
  }
  return static_cast<std::size_t>(v);
}

}  // namespace

std::string format_complex(Complex z, int precision) {
  char buf[96];
  const double im = z.imag();
  std::snprintf(buf, sizeof buf, "%.*g%c%.*gj", precision, z.real(),
                std::signbit(im) ? '-' : '+', precision, std::abs(im));
  return buf;
}

Complex parse_complex(const std::string& token) {
  if (token.size() < 2 || token.back() != 'j') {
    throw ParseError("complex entry '" + token + "' must end in 'j'", 0);
  }
  const char* s = token.c_str();
  char* end = nullptr;
  errno = 0;
  const double re = std::strtod(s, &end);
  if (end == s || errno == ERANGE) throw ParseError("bad real part in '" + token + "'", 0);
  if (*end != '+' && *end != '-') {
    throw ParseError("expected sign before imaginary part in '" + token + "'",
                     static_cast<std::size_t>(end - s));
  }
  const char* im_start = end;
  const double im = std::strtod(im_start, &end);
  if (end == im_start || *end != 'j' || end[1] != '\0') {
    throw ParseError("bad imaginary part in '" + token + "'", static_cast<std::size_t>(im_start - s));
  }
  if (!std::isfinite(re) || !std::isfinite(im)) {
    throw ParseError("non-finite entry '" + token + "'", 0);
  }
  return {re, im};
}

void write_fixture(std::ostream& out, const DenseMatrix& m, int precision) {
  out << "matrix " << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << format_complex(m(i, j), precision);
    }
    out << '\n';
  }
}

void write_fixture(std::ostream& out, const StateVector& psi, int precision) {
  out << "state " << psi.n_qubits() << '\n';
  for (std::size_t i = 0; i < psi.dim(); ++i) out << format_complex(psi[i], precision) << '\n';
}

Fixture read_fixture(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  auto next_nonblank = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  auto parse_entry = [&](const std::string& tok) {
    try {
      return parse_complex(tok);
    } catch (const ParseError& e) {
      throw ParseError(e.detail(), lineno - 1);
    }
  };

  if (!next_nonblank()) throw ParseError("empty fixture", 0);
  const auto header = split_spaces(line);
  if (header.empty()) throw ParseError("missing header", lineno - 1);

  if (header[0] == "matrix") {
    if (header.size() != 3) throw ParseError("header must be 'matrix <rows> <cols>'", lineno - 1);
    const std::size_t rows = parse_count(header[1], lineno - 1);
    const std::size_t cols = parse_count(header[2], lineno - 1);
    std::vector<Complex> entries;
    entries.reserve(rows * cols);
    for (std::size_t r = 0; r < rows; ++r) {
      if (!next_nonblank()) throw ParseError("expected " + std::to_string(rows) + " rows", lineno);
      const auto toks = split_spaces(line);
      if (toks.size() != cols) {
        throw ParseError("row has " + std::to_string(toks.size()) + " entries, expected " +
                             std::to_string(cols),
                         lineno - 1);
      }
      for (const auto& t : toks) entries.push_back(parse_entry(t));
    }
    return DenseMatrix(rows, cols, std::move(entries));
  }
  if (header[0] == "state") {
    if (header.size() != 2) throw ParseError("header must be 'state <n_qubits>'", lineno - 1);
    const std::size_t n = parse_count(header[1], lineno - 1);
    if (n > static_cast<std::size_t>(kDefaultMaxQubits)) {
      throw ParseError("qubit count above cap", lineno - 1);
    }
    const std::size_t dim = std::size_t{1} << n;
    std::vector<Complex> amps;
    amps.reserve(dim);
    while (amps.size() < dim) {
      if (!next_nonblank()) {
        throw ParseError("expected " + std::to_string(dim) + " amplitudes", lineno);
      }
      for (const auto& t : split_spaces(line)) amps.push_back(parse_entry(t));
    }
    if (amps.size() != dim) throw ParseError("too many amplitudes", lineno - 1);
    return StateVector(static_cast<int>(n), std::move(amps));
  }
  throw ParseError("unknown fixture kind '" + header[0] + "'", lineno - 1);
}

Fixture read_fixture_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open fixture file '" + path + "'");
  return read_fixture(in);
}

}  // namespace braidq
