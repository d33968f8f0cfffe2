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

#include "braidq/braid_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <random>

#include "braidq/errors.hpp"

namespace braidq {

namespace {

DenseMatrix make_r() {
  const double h = 1.0 / std::sqrt(2.0);
  return DenseMatrix{{h, 0, 0, h}, {0, h, -h, 0}, {0, h, h, 0}, {-h, 0, 0, h}};
}

DenseMatrix embed_pair(const DenseMatrix& gate, int first, int n_qubits, int cap) {
  const DenseMatrix left = DenseMatrix::identity(std::size_t{1} << (first - 1));
  const DenseMatrix right = DenseMatrix::identity(std::size_t{1} << (n_qubits - first - 1));
  return kron(kron(left, gate, cap), right, cap);
}

}  // namespace

void check_generator(Generator g, int strands) {
  if (strands < 2) throw RangeError("a braid needs at least 2 strands");
  if (g.index < 1 || g.index > strands - 1) {
    throw RangeError("generator index " + std::to_string(g.index) + " out of range [1, " +
                     std::to_string(strands - 1) + "]");
  }
}

const DenseMatrix& r_gate() {
  static const DenseMatrix r = make_r();
  return r;
}

const DenseMatrix& r_gate_inverse() {
  static const DenseMatrix rt = transpose(make_r());
  return rt;
}

const RealPairOperator& r_pair(Sign sign) {
  static const RealPairOperator forward = to_real_pair_operator(r_gate());
  static const RealPairOperator backward = to_real_pair_operator(r_gate_inverse());
  return sign == Sign::kPositive ? forward : backward;
}

DenseMatrix sigma_dense(int index, Sign sign, int n_qubits, int dense_cap) {
  if (n_qubits > dense_cap) {
    throw SizeError("dense generator for " + std::to_string(n_qubits) +
                    " qubits exceeds the dense cap of " + std::to_string(dense_cap) +
                    "; use apply_generator");
  }
  check_generator({index, sign}, n_qubits);
  const DenseMatrix& gate = sign == Sign::kPositive ? r_gate() : r_gate_inverse();
  return embed_pair(gate, index, n_qubits, dense_cap);
}

std::size_t apply_generator_inplace(std::span<Complex> amplitudes, int n_qubits, Generator g) {
  check_generator(g, n_qubits);
  return apply_pair(amplitudes, n_qubits, g.index, r_pair(g.sign));
}

StateVector apply_generator(const StateVector& psi, Generator g) {
  StateVector out = psi;
  apply_generator_inplace(out.amplitudes(), out.n_qubits(), g);
  return out;
}

StateVector apply_generator(const StateVector& psi, int index, Sign sign) {
  return apply_generator(psi, Generator{index, sign});
}

double verify_yang_baxter(const DenseMatrix& gate) {
  if (gate.rows() != 4 || gate.cols() != 4) throw DimensionError("Yang-Baxter gate must be 4x4");
  const DenseMatrix a = embed_pair(gate, 1, 3, 3);
  const DenseMatrix b = embed_pair(gate, 2, 3, 3);
  return max_abs_diff(matmul(matmul(a, b), a), matmul(matmul(b, a), b));
}

std::string to_string(Relation r) {
  switch (r) {
    case Relation::kFarCommutation:
      return "commutation";
    case Relation::kBraid:
      return "braid";
    case Relation::kInverse:
      return "inverse";
  }
  return "unknown";
}

double ArtinReport::max_residual() const {
  return std::max({max_far_commutation, max_braid, max_inverse});
}

StateVector random_state(int n_qubits, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  StateVector psi(n_qubits);
  for (auto& a : psi.amplitudes()) {
    const double re = gauss(rng);
    a = Complex(re, gauss(rng));
  }
  const double nrm = psi.norm();
  for (auto& a : psi.amplitudes()) a /= nrm;
  return psi;
}

ArtinReport verify_artin_relations(int n_qubits, int trials, std::uint64_t seed) {
  if (n_qubits < 3) {
    throw ArgumentError("Artin relations need n >= 3 (no braid relation exists for n = " +
                        std::to_string(n_qubits) + ")");
  }
  if (trials < 1) throw ArgumentError("trials must be positive");

  ArtinReport report;
  report.n_qubits = n_qubits;
  report.trials = trials;
  report.seed = seed;

  std::vector<StateVector> states;
  states.reserve(trials);
  std::mt19937_64 seeder(seed);
  for (int t = 0; t < trials; ++t) states.push_back(random_state(n_qubits, seeder()));

  // Word w acts on a ket right to left.
  auto act = [](const StateVector& psi, std::initializer_list<Generator> word) {
    StateVector out = psi;
    for (auto it = std::rbegin(word); it != std::rend(word); ++it) {
      apply_generator_inplace(out.amplitudes(), out.n_qubits(), *it);
    }
    return out;
  };

  const Sign p = Sign::kPositive;
  for (int i = 1; i <= n_qubits - 1; ++i) {
    for (int j = i; j <= n_qubits - 1; ++j) {
      const Generator gi{i, p};
      const Generator gj{j, p};
      if (j == i) {
        double worst = 0.0;
        for (const auto& psi : states) {
          worst = std::max(worst, max_abs_diff(act(psi, {gi, inverse(gi)}), psi));
          worst = std::max(worst, max_abs_diff(act(psi, {inverse(gi), gi}), psi));
        }
        report.entries.push_back({Relation::kInverse, i, i, worst});
        report.max_inverse = std::max(report.max_inverse, worst);
      } else if (j - i == 1) {
        double worst = 0.0;
        for (const auto& psi : states) {
          worst = std::max(worst, max_abs_diff(act(psi, {gi, gj, gi}), act(psi, {gj, gi, gj})));
        }
        report.entries.push_back({Relation::kBraid, i, j, worst});
        report.max_braid = std::max(report.max_braid, worst);
      } else {
        double worst = 0.0;
        for (const auto& psi : states) {
          worst = std::max(worst, max_abs_diff(act(psi, {gi, gj}), act(psi, {gj, gi})));
        }
        report.entries.push_back({Relation::kFarCommutation, i, j, worst});
        report.max_far_commutation = std::max(report.max_far_commutation, worst);
      }
    }
  }
  return report;
}

}  // namespace braidq
