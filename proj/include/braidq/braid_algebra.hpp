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

#include "braidq/linalg.hpp"

namespace braidq {

/// Dense sigma_i construction stops here (2^12 x 2^12 = 16.8M entries).
inline constexpr int kDefaultDenseCap = 12;
/// Matrix-free application and basis generation stop here.
inline constexpr int kDefaultMatrixFreeCap = 20;

enum class Sign : int { kInverse = -1, kPositive = +1 };

/// One Artin generator sigma_index^(sign). The strand count lives on the
/// containing word; use check_generator() to validate against it.
struct Generator {
  int index = 1;
  Sign sign = Sign::kPositive;

  bool operator==(const Generator&) const = default;
};

constexpr Generator inverse(Generator g) {
  return {g.index, g.sign == Sign::kPositive ? Sign::kInverse : Sign::kPositive};
}

/// Throws RangeError unless 1 <= g.index <= strands - 1.
void check_generator(Generator g, int strands);

/// The braiding gate
///   R = 1/sqrt(2) [[ 1, 0, 0, 1],
///                  [ 0, 1,-1, 0],
///                  [ 0, 1, 1, 0],
///                  [-1, 0, 0, 1]]
/// R is real orthogonal, so R^-1 = R^T.
const DenseMatrix& r_gate();
const DenseMatrix& r_gate_inverse();
const RealPairOperator& r_pair(Sign sign);

/// I^(i-1) (x) R^sign (x) I^(n-i-1), built with kron. n is capped at dense_cap.
DenseMatrix sigma_dense(int index, Sign sign, int n_qubits, int dense_cap = kDefaultDenseCap);

/// In-place sigma_i^sign on a 2^n amplitude span, never forming the 2^n
/// matrix. Returns the number of 4-amplitude groups touched (2^(n-2)).
std::size_t apply_generator_inplace(std::span<Complex> amplitudes, int n_qubits, Generator g);

StateVector apply_generator(const StateVector& psi, int index, Sign sign);
StateVector apply_generator(const StateVector& psi, Generator g);

/// max|(R(x)I)(I(x)R)(R(x)I) - (I(x)R)(R(x)I)(I(x)R)| for the given 4x4 gate.
double verify_yang_baxter(const DenseMatrix& gate = r_gate());

enum class Relation { kFarCommutation, kBraid, kInverse };

std::string to_string(Relation r);

struct RelationResidual {
  Relation relation;
  int i;
  int j;  // equals i for the inverse relation
  double residual;
};

struct ArtinReport {
  int n_qubits = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  std::vector<RelationResidual> entries;
  double max_far_commutation = 0.0;
  double max_braid = 0.0;
  double max_inverse = 0.0;

  double max_residual() const;
};

/// Normalized random state with Gaussian amplitudes, deterministic per seed.
StateVector random_state(int n_qubits, std::uint64_t seed);

/// Checks every Artin relation among sigma_1..sigma_{n-1} on `trials` random
/// states using matrix-free application only. Requires n >= 3.
ArtinReport verify_artin_relations(int n_qubits, int trials, std::uint64_t seed);

}  // namespace braidq
