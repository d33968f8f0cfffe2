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

#include "braidq/linalg.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "braidq/braid_algebra.hpp"
#include "braidq/entanglement.hpp"
#include "braidq/errors.hpp"
#include "braidq/fixture_io.hpp"
#include "test_support.hpp"

namespace braidq {
namespace {

using testing::rho_ab_times4;
using testing::random_hermitian;
using testing::random_matrix;

const double kSqrt2 = std::sqrt(2.0);

TEST(Kron, IdentityTimesIdentityIsIdentity) {
  EXPECT_EQ(kron(DenseMatrix::identity(2), DenseMatrix::identity(2)), DenseMatrix::identity(4));
}

TEST(Kron, RTensorIdentityIsSigmaOneOnThreeQubits) {
  const DenseMatrix s1 = kron(r_gate(), DenseMatrix::identity(2));
  ASSERT_EQ(s1.rows(), 8u);
  EXPECT_LE(max_abs_diff(s1, testing::reference_pair_embedding(testing::reference_r(+1), 1, 3)),
            1e-15);
}

TEST(Kron, PauliYTensorPauliYHasSignedAntidiagonal) {
  const DenseMatrix yy = kron(pauli_y(), pauli_y());
  const DenseMatrix expected{{0, 0, 0, -1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {-1, 0, 0, 0}};
  EXPECT_EQ(max_abs_diff(yy, expected), 0.0);
}

TEST(Kron, EntryLayout) {
  std::mt19937_64 rng(3);
  const DenseMatrix a = random_matrix(2, rng);
  const DenseMatrix b(3, 2, {1, 2, 3, 4, 5, 6});
  const DenseMatrix k = kron(a, b);
  ASSERT_EQ(k.rows(), 6u);
  ASSERT_EQ(k.cols(), 4u);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 2; ++c) EXPECT_EQ(k(i * 3 + r, j * 2 + c), a(i, j) * b(r, c));
}

TEST(Kron, SizeCapRaises) {
  const DenseMatrix big = DenseMatrix::identity(4);
  EXPECT_THROW(kron(big, big, 3), SizeError);
}

TEST(Kron, IsAssociative) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const DenseMatrix a = random_matrix(2, rng);
    const DenseMatrix b = random_matrix(3, rng);
    const DenseMatrix c = random_matrix(2, rng);
    EXPECT_LE(max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c))), 1e-14);
  }
}

TEST(Kron, OfUnitariesIsUnitary) {
  const DenseMatrix u = kron(r_gate(), kron(pauli_y(), r_gate_inverse()));
  EXPECT_LE(unitarity_residual(u), 1e-12);
}

TEST(Matmul, RTimesRTransposeIsIdentity) {
  EXPECT_LE(max_abs_diff(matmul(r_gate(), transpose(r_gate())), DenseMatrix::identity(4)), 1e-12);
}

TEST(Matmul, IdentityIsNeutral) {
  std::mt19937_64 rng(5);
  const DenseMatrix m = random_matrix(5, rng);
  EXPECT_EQ(matmul(DenseMatrix::identity(5), m), m);
}

TEST(Matmul, SigmaOneSigmaTwoMatchesKnownProduct) {
  const DenseMatrix s1 = kron(r_gate(), DenseMatrix::identity(2));
  const DenseMatrix s2 = kron(DenseMatrix::identity(2), r_gate());
  const DenseMatrix expected = 0.5 * testing::s1s2_times2();
  EXPECT_LE(max_abs_diff(matmul(s1, s2), expected), 1e-12);
}

TEST(Matmul, ShapeMismatchRaises) {
  EXPECT_THROW(matmul(DenseMatrix(2, 3), DenseMatrix(2, 3)), DimensionError);
}

TEST(Dagger, Cases) {
  EXPECT_EQ(dagger(DenseMatrix::identity(3)), DenseMatrix::identity(3));
  EXPECT_LE(max_abs_diff(matmul(r_gate(), dagger(r_gate())), DenseMatrix::identity(4)), 1e-12);
  EXPECT_EQ(dagger(pauli_y()), pauli_y());
}

TEST(MaxAbsDiff, Cases) {
  EXPECT_EQ(max_abs_diff(DenseMatrix::identity(4), DenseMatrix::identity(4)), 0.0);
  EXPECT_NEAR(max_abs_diff(r_gate(), transpose(r_gate())), 2.0 / kSqrt2, 1e-15);
  EXPECT_THROW(max_abs_diff(DenseMatrix(2, 2), DenseMatrix(2, 3)), DimensionError);
  EXPECT_THROW(max_abs_diff(StateVector(2), StateVector(3)), DimensionError);
}

TEST(HermitianEigen, Identity) {
  const auto eig = hermitian_eigen(DenseMatrix::identity(4));
  for (double v : eig.values) EXPECT_NEAR(v, 1.0, 1e-15);
}

TEST(HermitianEigen, PauliY) {
  const auto eig = hermitian_eigen(pauli_y());
  ASSERT_EQ(eig.values.size(), 2u);
  EXPECT_NEAR(eig.values[0], 1.0, 1e-12);
  EXPECT_NEAR(eig.values[1], -1.0, 1e-12);
}

TEST(HermitianEigen, ReducedBellDensity) {
  const DenseMatrix rho = 0.25 * rho_ab_times4();
  const auto eig = hermitian_eigen(rho);
  const std::vector<double> expected{0.5, 0.5, 0.0, 0.0};
  for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(eig.values[k], expected[k], 1e-12);
}

TEST(HermitianEigen, RejectsNonHermitian) {
  const DenseMatrix m{{1, 2}, {0, 1}};
  EXPECT_THROW(hermitian_eigen(m), ContractViolation);
}

TEST(HermitianEigen, SweepCapRaisesNumericError) {
  std::mt19937_64 rng(2);
  EXPECT_THROW(hermitian_eigen(random_hermitian(16, rng), 1), NumericError);
}

TEST(HermitianEigen, ReconstructsRandomMatricesUpTo64) {
  std::mt19937_64 rng(20261016);
  for (std::size_t dim : {1u, 2u, 3u, 7u, 16u, 33u, 64u}) {
    const DenseMatrix m = random_hermitian(dim, rng);
    const auto eig = hermitian_eigen(m);
    EXPECT_TRUE(std::is_sorted(eig.values.rbegin(), eig.values.rend()));
    DenseMatrix vd = eig.vectors;
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c) vd(r, c) *= eig.values[c];
    EXPECT_LE(max_abs_diff(matmul(vd, dagger(eig.vectors)), m), 1e-9) << "dim " << dim;
    EXPECT_LE(max_abs_diff(matmul(m, eig.vectors), vd), 1e-10) << "dim " << dim;
    EXPECT_LE(unitarity_residual(eig.vectors), 1e-10) << "dim " << dim;
  }
}

TEST(PsdSqrt, Cases) {
  EXPECT_LE(max_abs_diff(psd_sqrt(DenseMatrix::identity(4)), DenseMatrix::identity(4)), 1e-12);
  EXPECT_LE(max_abs_diff(psd_sqrt(4.0 * DenseMatrix::identity(3)), 2.0 * DenseMatrix::identity(3)),
            1e-12);
  const DenseMatrix rho = 0.25 * rho_ab_times4();
  EXPECT_LE(max_abs_diff(matmul(rho, rho), 0.5 * rho), 1e-15);
  EXPECT_LE(max_abs_diff(psd_sqrt(rho), kSqrt2 * rho), 1e-12);
}

TEST(PsdSqrt, RejectsNegativeSpectrum) {
  EXPECT_THROW(psd_sqrt(pauli_y()), ContractViolation);
}

TEST(PsdSqrt, ClampsRoundoffNegatives) {
  const std::vector<double> d{1.0, -5e-11};
  const DenseMatrix s = psd_sqrt(DenseMatrix::diagonal(d));
  EXPECT_EQ(s(1, 1), Complex(0.0));
}

TEST(PsdSqrt, SquaresBackForRandomPsdUpTo64) {
  std::mt19937_64 rng(77);
  for (std::size_t dim : {2u, 5u, 16u, 64u}) {
    const DenseMatrix a = random_matrix(dim, rng);
    const DenseMatrix m = (1.0 / static_cast<double>(dim)) * matmul(a, dagger(a));
    const DenseMatrix s = psd_sqrt(m);
    EXPECT_LE(hermiticity_residual(s), 1e-10);
    EXPECT_LE(max_abs_diff(matmul(s, s), m), 1e-9) << "dim " << dim;
  }
}

TEST(StateVector, Invariants) {
  EXPECT_THROW(StateVector(2, std::vector<Complex>(3)), DimensionError);
  EXPECT_THROW(StateVector(0), SizeError);
  const StateVector psi = StateVector::basis(3, 7);
  EXPECT_EQ(psi[7], Complex(1.0));
  EXPECT_TRUE(psi.is_normalized());
  EXPECT_THROW(StateVector::basis(3, 8), RangeError);
  EXPECT_THROW(StateVector(1, {Complex(NAN, 0), 0.0}), ContractViolation);
}

TEST(PairKernel, CountsGroupsAndRejectsBadPairs) {
  StateVector psi(6);
  EXPECT_EQ(apply_pair(psi.amplitudes(), 6, 3, to_pair_operator(DenseMatrix::identity(4))),
            std::size_t{16});
  EXPECT_THROW(apply_pair(psi.amplitudes(), 6, 6, to_pair_operator(DenseMatrix::identity(4))),
               RangeError);
  EXPECT_THROW(to_real_pair_operator(kron(pauli_y(), DenseMatrix::identity(2))),
               ContractViolation);
}

TEST(Fixture, ParsesComplexTokens) {
  EXPECT_EQ(parse_complex("0.5+0j"), Complex(0.5, 0));
  EXPECT_EQ(parse_complex("-1-2.5j"), Complex(-1, -2.5));
  EXPECT_EQ(parse_complex("1e-05+1e+02j"), Complex(1e-5, 100));
  EXPECT_THROW(parse_complex("0.5"), ParseError);
  EXPECT_THROW(parse_complex("0.5 0j"), ParseError);
  EXPECT_THROW(parse_complex("abc+1j"), ParseError);
}

TEST(Fixture, RoundTripPreservesValues) {
  std::mt19937_64 rng(9);
  const DenseMatrix m = random_matrix(5, rng);
  std::stringstream ss;
  write_fixture(ss, m);
  const auto back = read_fixture(ss);
  ASSERT_TRUE(std::holds_alternative<DenseMatrix>(back));
  EXPECT_EQ(std::get<DenseMatrix>(back), m);

  const StateVector psi = testing::random_unit_state(3, rng);
  std::stringstream st;
  write_fixture(st, psi);
  EXPECT_EQ(std::get<StateVector>(read_fixture(st)), psi);
}

TEST(Fixture, ReadsHandWrittenState) {
  std::istringstream in("state 1\n0.6+0j\n0-0.8j\n");
  const auto psi = std::get<StateVector>(read_fixture(in));
  EXPECT_EQ(psi[1], Complex(0, -0.8));
}

TEST(Fixture, ReportsMalformedInput) {
  std::istringstream bad_header("tensor 2 2\n");
  EXPECT_THROW(read_fixture(bad_header), ParseError);
  std::istringstream short_row("matrix 2 2\n1+0j 0+0j\n0+0j\n");
  try {
    read_fixture(short_row);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
}

}  // namespace
}  // namespace braidq
