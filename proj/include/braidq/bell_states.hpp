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
#include <string>
#include <vector>

#include "braidq/braid_algebra.hpp"
#include "braidq/braid_word.hpp"
#include "braidq/linalg.hpp"

namespace braidq {

/// Largest n for which bell_basis() materializes all 2^n states.
inline constexpr int kDefaultBasisCap = 12;

/// |C index>, 1-based: amplitude 1 at zero-based position index - 1.
StateVector computational_state(int n_qubits, std::uint64_t index);

/// "s1 s2 ... s(n-1)" on n strands.
BraidWord cascade_word(int n_qubits);

/// cascade_word(n) applied to |C index>, matrix-free.
StateVector bell_state(int n_qubits, std::uint64_t index,
                       int matrix_free_cap = kDefaultMatrixFreeCap);

struct BellBasis {
  int n_qubits = 0;
  std::vector<StateVector> states;  // states[k] is |B k+1>
};

BellBasis bell_basis(int n_qubits, int basis_cap = kDefaultBasisCap);

/// max|<Bi|Bj> - delta_ij| over all pairs.
double gram_deviation(const BellBasis& basis);

/// "0110"-style label of a zero-based basis index, qubit 1 first.
std::string bitstring(std::uint64_t zero_based_index, int n_qubits);

struct StateTerms {
  std::uint64_t index = 0;               // 1-based
  std::size_t nonzero_count = 0;
  std::vector<double> magnitudes;        // distinct |amplitude| values, ascending
  std::vector<std::uint64_t> positions;  // zero-based, ascending
  std::vector<int> signs;                // sign of each nonzero amplitude
  bool real = true;
  bool ok = true;
};

struct TermStructureReport {
  int n_qubits = 0;
  std::size_t expected_terms = 0;
  double expected_magnitude = 0.0;
  std::vector<StateTerms> states;
  bool ok = true;
};

/// Per-state term count, magnitude set and sign vector; flags any state
/// that is not 2^(n-1) real terms of magnitude 2^(-(n-1)/2).
TermStructureReport term_structure(const StateVector& psi, std::uint64_t index,
                                   double tolerance = tol::kConstruction);
TermStructureReport term_structure_report(const BellBasis& basis,
                                          double tolerance = tol::kConstruction);

}  // namespace braidq
