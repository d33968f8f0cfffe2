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
#include <variant>

#include "braidq/linalg.hpp"

namespace braidq {

// Plain-text fixture format:
//
//   matrix <rows> <cols>          state <n_qubits>
//   <re+imj> <re+imj> ...         <re+imj>
//   ...                           ...
//
// One matrix row per line; a state has one amplitude per line. Entries are
// written as "re[+-]imj" and separated by single spaces.

using Fixture = std::variant<DenseMatrix, StateVector>;

std::string format_complex(Complex z, int precision = 17);
Complex parse_complex(const std::string& token);

void write_fixture(std::ostream& out, const DenseMatrix& m, int precision = 17);
void write_fixture(std::ostream& out, const StateVector& psi, int precision = 17);

/// Throws ParseError with a line-based position on malformed input.
Fixture read_fixture(std::istream& in);
Fixture read_fixture_file(const std::string& path);

}  // namespace braidq
