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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "braidq/braid_algebra.hpp"
#include "braidq/linalg.hpp"

namespace braidq {

/// A word in the Artin generators on `strands` strands. letters[0] is the
/// topmost crossing of the diagram and the leftmost matrix factor.
struct BraidWord {
  int strands = 2;
  std::vector<Generator> letters;

  bool empty() const noexcept { return letters.empty(); }
  std::size_t size() const noexcept { return letters.size(); }

  bool operator==(const BraidWord&) const = default;
};

/// Grammar (whitespace between letters is optional):
///   word    := letter*
///   letter  := "s" INT inverse?
///   inverse := "'" | "^-1"
/// When strands is omitted it becomes max index + 1 (2 for the empty word).
/// Throws ParseError (with character offset) or RangeError.
BraidWord parse(std::string_view text, std::optional<int> strands = std::nullopt);

/// Canonical text: letters as "s<i>" or "s<i>'", single-space separated.
/// The empty word renders as "".
std::string to_string(const BraidWord& w);

/// Cancels adjacent sigma_i sigma_i^-1 pairs until none remain.
BraidWord free_reduce(const BraidWord& w);

/// Sorts far-commuting neighbours by ascending index and free-reduces,
/// iterating both to a joint fixpoint.
BraidWord commute_normalize(const BraidWord& w);

/// Dense product letter_1 * letter_2 * ... * letter_k over n_qubits.
DenseMatrix compile(const BraidWord& w, int n_qubits, int dense_cap = kDefaultDenseCap);

/// compile(w, n) * psi, evaluated matrix-free right to left.
StateVector apply(const BraidWord& w, const StateVector& psi);

/// Same, in place on an amplitude span; returns the 4-amplitude group count.
std::size_t apply_inplace(const BraidWord& w, std::span<Complex> amplitudes, int n_qubits);

/// ASCII diagram: a label row, a strand row, then one 4-row block per letter.
/// A positive crossing draws '\' over the centre, an inverse draws '/'.
std::string render_ascii(const BraidWord& w);

}  // namespace braidq
