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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "braidq/errors.hpp"
#include "test_support.hpp"

namespace braidq {
namespace {

using testing::reference_pair_embedding;
using testing::reference_r;

TEST(RGate, IsRealOrthogonalYangBaxterSolution) {
  EXPECT_LE(unitarity_residual(r_gate()), 1e-12);
  for (const auto& z : r_gate().data()) EXPECT_EQ(z.imag(), 0.0);
  EXPECT_LE(max_abs_diff(r_gate_inverse(), transpose(r_gate())), 0.0);
  EXPECT_LE(max_abs_diff(matmul(r_gate(), r_gate_inverse()), DenseMatrix::identity(4)), 1e-12);
  EXPECT_LE(max_abs_diff(r_gate(), reference_r(+1)), 0.0);
}

TEST(SigmaDense, TwoQubitsIsR) {
  EXPECT_EQ(sigma_dense(1, Sign::kPositive, 2), r_gate());
}

TEST(SigmaDense, ThreeQubitEmbeddings) {
  const DenseMatrix i2 = DenseMatrix::identity(2);
  EXPECT_LE(max_abs_diff(sigma_dense(1, Sign::kPositive, 3), kron(r_gate(), i2)), 0.0);
  EXPECT_LE(max_abs_diff(sigma_dense(2, Sign::kPositive, 3), kron(i2, r_gate())), 0.0);
}

TEST(SigmaDense, InverseCancels) {
  EXPECT_LE(max_abs_diff(matmul(sigma_dense(1, Sign::kPositive, 3), sigma_dense(1, Sign::kInverse, 3)),
                         DenseMatrix::identity(8)),
            1e-12);
}

TEST(SigmaDense, MatchesBitPairReferenceAndIsUnitary) {
  for (int n = 2; n <= 7; ++n) {
    for (int i = 1; i < n; ++i) {
      for (Sign s : {Sign::kPositive, Sign::kInverse}) {
        const DenseMatrix sigma = sigma_dense(i, s, n);
        EXPECT_LE(max_abs_diff(sigma, reference_pair_embedding(reference_r(static_cast<int>(s)), i, n)),
                  1e-15);
        EXPECT_LE(unitarity_residual(sigma), 1e-12);
      }
    }
  }
}

TEST(SigmaDense, UnitaryAtDenseCap) {
  // Largest allowed size; checked through columns to avoid a 4096^3 product.
  const DenseMatrix sigma = sigma_dense(6, Sign::kInverse, 12);
  EXPECT_EQ(sigma.rows(), 4096u);
  std::mt19937_64 rng(12);
  const StateVector psi = testing::random_unit_state(12, rng);
  EXPECT_NEAR(matvec(sigma, psi).norm(), 1.0, 1e-12);
}

TEST(SigmaDense, Errors) {
  EXPECT_THROW(sigma_dense(0, Sign::kPositive, 3), RangeError);
  EXPECT_THROW(sigma_dense(3, Sign::kPositive, 3), RangeError);
  EXPECT_THROW(sigma_dense(1, Sign::kPositive, 13), SizeError);
  EXPECT_THROW(sigma_dense(1, Sign::kPositive, 5, 4), SizeError);
}

TEST(ApplyGenerator, ZeroZeroBecomesBellPair) {
  const StateVector out = apply_generator(StateVector::basis(2, 0), 1, Sign::kPositive);
  const double h = 1.0 / std::sqrt(2.0);
  EXPECT_LE(max_abs_diff(out, StateVector(2, {h, 0, 0, -h})), 1e-15);
}

TEST(ApplyGenerator, InverseCancelsOnRandomStates) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const StateVector psi = testing::random_unit_state(5, rng);
    for (int i = 1; i <= 4; ++i) {
      const StateVector back =
          apply_generator(apply_generator(psi, i, Sign::kPositive), i, Sign::kInverse);
      EXPECT_LE(max_abs_diff(back, psi), 1e-12);
    }
  }
}

TEST(ApplyGenerator, CascadeOnZeroGivesFirstBellState) {
  // sigma_1 sigma_2 |000>: sigma_2 acts first.
  const StateVector psi =
      apply_generator(apply_generator(StateVector::basis(3, 0), 2, Sign::kPositive), 1,
                      Sign::kPositive);
  const auto expected = testing::state_from_terms(3, testing::bell3_terms()[0], 0.5);
  EXPECT_LE(max_abs_diff(psi, expected), 1e-12);
}

TEST(ApplyGenerator, AgreesWithDenseAndPreservesNorm) {
  std::mt19937_64 rng(2026);
  for (int n = 2; n <= 10; ++n) {
    std::uniform_int_distribution<int> pick(1, n - 1);
    for (int trial = 0; trial < 4; ++trial) {
      const StateVector psi = testing::random_unit_state(n, rng);
      const int i = pick(rng);
      const Sign s = trial % 2 ? Sign::kInverse : Sign::kPositive;
      const StateVector fast = apply_generator(psi, i, s);
      EXPECT_LE(max_abs_diff(fast, matvec(sigma_dense(i, s, n), psi)), 1e-12)
          << "n=" << n << " i=" << i;
      EXPECT_NEAR(fast.norm(), psi.norm(), 1e-12);
    }
  }
}

TEST(ApplyGenerator, TouchesEachAmplitudeOnce) {
  for (int n = 2; n <= 14; n += 3) {
    StateVector psi(n);
    const std::size_t groups = apply_generator_inplace(psi.amplitudes(), n, {1, Sign::kPositive});
    EXPECT_EQ(groups, std::size_t{1} << (n - 2));
    EXPECT_EQ(4 * groups, psi.dim());
  }
}

TEST(ApplyGenerator, RangeErrors) {
  const StateVector psi(4);
  EXPECT_THROW(apply_generator(psi, 0, Sign::kPositive), RangeError);
  EXPECT_THROW(apply_generator(psi, 4, Sign::kPositive), RangeError);
}

TEST(YangBaxter, Residuals) {
  EXPECT_LE(verify_yang_baxter(), 1e-12);
  EXPECT_EQ(verify_yang_baxter(DenseMatrix::identity(4)), 0.0);
  const DenseMatrix swap{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}};
  EXPECT_EQ(verify_yang_baxter(swap), 0.0);
}

TEST(YangBaxter, DetectsNonSolution) {
  // CNOT does not satisfy the braided Yang-Baxter equation.
  const DenseMatrix cnot{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
  EXPECT_GT(verify_yang_baxter(cnot), 0.5);
}

TEST(Artin, ThreeStrandBraidRelation) {
  const auto report = verify_artin_relations(3, 20, 1);
  EXPECT_LE(report.max_braid, 1e-12);
  EXPECT_EQ(report.max_far_commutation, 0.0);  // no far pairs at n = 3
}

TEST(Artin, FourStrandFarCommutation) {
  const auto report = verify_artin_relations(4, 20, 2);
  bool found = false;
  for (const auto& e : report.entries) {
    if (e.relation == Relation::kFarCommutation && e.i == 1 && e.j == 3) {
      found = true;
      EXPECT_LE(e.residual, 1e-12);
    }
  }
  EXPECT_TRUE(found);
}

TEST(Artin, EightStrandsAllRelations) {
  const auto report = verify_artin_relations(8, 20, 7);
  EXPECT_LE(report.max_residual(), 1e-12);
  // 7 inverse + 6 braid + 15 far pairs.
  EXPECT_EQ(report.entries.size(), 28u);
}

TEST(Artin, Deterministic) {
  const auto a = verify_artin_relations(5, 3, 99);
  const auto b = verify_artin_relations(5, 3, 99);
  ASSERT_EQ(a.entries.size(), b.entries.size());
  for (std::size_t k = 0; k < a.entries.size(); ++k)
    EXPECT_EQ(a.entries[k].residual, b.entries[k].residual);
}

TEST(Artin, RejectsTwoStrands) {
  EXPECT_THROW(verify_artin_relations(2, 5, 1), ArgumentError);
}

}  // namespace
}  // namespace braidq
