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

#include "braidq/bell_states.hpp"

#include <algorithm>
#include <cmath>

#include "braidq/errors.hpp"

namespace braidq {

StateVector computational_state(int n_qubits, std::uint64_t index) {
  if (n_qubits < 1 || n_qubits > kDefaultMaxQubits) {
    throw SizeError("qubit count " + std::to_string(n_qubits) + " out of range");
  }
  const std::uint64_t dim = std::uint64_t{1} << n_qubits;
  if (index < 1 || index > dim) {
    throw RangeError("basis index " + std::to_string(index) + " out of range [1, " +
                     std::to_string(dim) + "]");
  }
  return StateVector::basis(n_qubits, index - 1);
}

BraidWord cascade_word(int n_qubits) {
  if (n_qubits < 2) throw ArgumentError("cascade needs n >= 2");
  BraidWord w{n_qubits, {}};
  for (int i = 1; i < n_qubits; ++i) w.letters.push_back({i, Sign::kPositive});
  return w;
}

StateVector bell_state(int n_qubits, std::uint64_t index, int matrix_free_cap) {
  if (n_qubits < 2) throw ArgumentError("Bell states need n >= 2");
  if (n_qubits > matrix_free_cap) {
    throw SizeError("n = " + std::to_string(n_qubits) + " exceeds the matrix-free cap of " +
                    std::to_string(matrix_free_cap));
  }
  return apply(cascade_word(n_qubits), computational_state(n_qubits, index));
}

BellBasis bell_basis(int n_qubits, int basis_cap) {
  if (n_qubits < 2) throw ArgumentError("Bell basis needs n >= 2");
  if (n_qubits > basis_cap) {
    throw SizeError("n = " + std::to_string(n_qubits) + " exceeds the basis cap of " +
                    std::to_string(basis_cap));
  }
  BellBasis basis{n_qubits, {}};
  const std::uint64_t dim = std::uint64_t{1} << n_qubits;
  basis.states.reserve(dim);
  for (std::uint64_t k = 1; k <= dim; ++k) basis.states.push_back(bell_state(n_qubits, k));
  return basis;
}

double gram_deviation(const BellBasis& basis) {
  double worst = 0.0;
  const auto& s = basis.states;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i; j < s.size(); ++j) {
      const Complex expected = i == j ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(inner(s[i], s[j]) - expected));
    }
  }
  return worst;
}

std::string bitstring(std::uint64_t zero_based_index, int n_qubits) {
  std::string bits(static_cast<std::size_t>(n_qubits), '0');
  for (int q = 0; q < n_qubits; ++q) {
    if ((zero_based_index >> (n_qubits - 1 - q)) & 1U) bits[static_cast<std::size_t>(q)] = '1';
  }
  return bits;
}

TermStructureReport term_structure(const StateVector& psi, std::uint64_t index, double tolerance) {
  const int n = psi.n_qubits();
  TermStructureReport report;
  report.n_qubits = n;
  report.expected_terms = std::size_t{1} << (n - 1);
  report.expected_magnitude = std::pow(2.0, -(n - 1) / 2.0);

  StateTerms terms;
  terms.index = index;
  for (std::size_t k = 0; k < psi.dim(); ++k) {
    const Complex a = psi[k];
    const double mag = std::abs(a);
    if (mag <= tolerance) continue;
    ++terms.nonzero_count;
    terms.positions.push_back(k);
    if (std::abs(a.imag()) > tolerance) terms.real = false;
    terms.signs.push_back(a.real() < 0.0 ? -1 : 1);
    const bool seen = std::any_of(terms.magnitudes.begin(), terms.magnitudes.end(),
                                  [&](double m) { return std::abs(m - mag) <= tolerance; });
    if (!seen) terms.magnitudes.push_back(mag);
  }
  std::sort(terms.magnitudes.begin(), terms.magnitudes.end());
  terms.ok = terms.real && terms.nonzero_count == report.expected_terms &&
             terms.magnitudes.size() == 1 &&
             std::abs(terms.magnitudes.front() - report.expected_magnitude) <= tolerance;
  report.ok = terms.ok;
  report.states.push_back(std::move(terms));
  return report;
}

TermStructureReport term_structure_report(const BellBasis& basis, double tolerance) {
  TermStructureReport report;
  report.n_qubits = basis.n_qubits;
  report.expected_terms = std::size_t{1} << (basis.n_qubits - 1);
  report.expected_magnitude = std::pow(2.0, -(basis.n_qubits - 1) / 2.0);
  for (std::size_t k = 0; k < basis.states.size(); ++k) {
    auto single = term_structure(basis.states[k], k + 1, tolerance);
    report.ok = report.ok && single.ok;
    report.states.push_back(std::move(single.states.front()));
  }
  return report;
}

}  // namespace braidq
