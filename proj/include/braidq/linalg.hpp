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

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace braidq {

using Complex = std::complex<double>;

/// Comparison tolerances shared by every module.
namespace tol {
inline constexpr double kConstruction = 1e-12;  // exact-by-construction values
inline constexpr double kGram = 1e-11;          // accumulated inner products
inline constexpr double kHermitian = 1e-10;     // eigensolver input check
inline constexpr double kEigen = 1e-9;          // eigenproblem results
inline constexpr double kZeroClamp = 1e-10;     // |ev| below this becomes 0
inline constexpr double kNegativeEigen = 1e-8;  // psd_sqrt hard failure
}  // namespace tol

/// Largest qubit count whose 2^n dimension kron() will produce.
inline constexpr int kDefaultMaxQubits = 24;

/// Row-major complex matrix.
class DenseMatrix {
 public:
  DenseMatrix(std::size_t rows, std::size_t cols);
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  DenseMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static DenseMatrix identity(std::size_t dim);
  static DenseMatrix diagonal(std::span<const double> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Complex> data() noexcept { return data_; }
  std::span<const Complex> data() const noexcept { return data_; }

  DenseMatrix& operator*=(Complex s);
  DenseMatrix& operator+=(const DenseMatrix& other);
  DenseMatrix& operator-=(const DenseMatrix& other);

  bool operator==(const DenseMatrix&) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> data_;
};

DenseMatrix operator*(Complex s, DenseMatrix m);
DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b);
DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b);

/// Pure n-qubit state, 2^n amplitudes, qubit 1 is the most significant bit.
class StateVector {
 public:
  explicit StateVector(int n_qubits);  // |0...0>
  StateVector(int n_qubits, std::vector<Complex> amplitudes);

  static StateVector basis(int n_qubits, std::uint64_t zero_based_index);

  int n_qubits() const noexcept { return n_qubits_; }
  std::size_t dim() const noexcept { return amps_.size(); }

  Complex& operator[](std::size_t i) { return amps_[i]; }
  const Complex& operator[](std::size_t i) const { return amps_[i]; }

  std::span<Complex> amplitudes() noexcept { return amps_; }
  std::span<const Complex> amplitudes() const noexcept { return amps_; }

  double norm() const;
  bool is_normalized(double tolerance = tol::kConstruction) const;

  bool operator==(const StateVector&) const = default;

 private:
  int n_qubits_;
  std::vector<Complex> amps_;
};

/// Number of qubits n with 2^n == dim; throws DimensionError otherwise.
int qubits_for_dim(std::size_t dim);

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b,
                 int max_qubits = kDefaultMaxQubits);
DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);
StateVector matvec(const DenseMatrix& m, const StateVector& psi);
DenseMatrix dagger(const DenseMatrix& m);
DenseMatrix transpose(const DenseMatrix& m);
DenseMatrix conjugate(const DenseMatrix& m);
StateVector conjugate(const StateVector& psi);
Complex trace(const DenseMatrix& m);

/// <a|b>, antilinear in the first argument.
Complex inner(const StateVector& a, const StateVector& b);
/// |psi><psi|
DenseMatrix outer(const StateVector& psi);

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);
double max_abs_diff(const StateVector& a, const StateVector& b);

/// max|m^dagger m - I|
double unitarity_residual(const DenseMatrix& m);
/// max|m - m^dagger|
double hermiticity_residual(const DenseMatrix& m);

struct EigenDecomposition {
  std::vector<double> values;  // descending
  DenseMatrix vectors;         // column k pairs with values[k]
};

/// Cyclic complex Jacobi. Throws ContractViolation when the input is not
/// Hermitian within tol::kHermitian and NumericError after max_sweeps.
EigenDecomposition hermitian_eigen(const DenseMatrix& m, int max_sweeps = 100);

/// Eigenvalues only, descending.
std::vector<double> hermitian_eigenvalues(const DenseMatrix& m);

/// Principal square root of a Hermitian PSD matrix. Eigenvalues with
/// magnitude <= tol::kZeroClamp are clamped to 0; anything below
/// -tol::kNegativeEigen is a ContractViolation.
DenseMatrix psd_sqrt(const DenseMatrix& m);

/// Row-major 4x4 operator acting on a qubit pair.
using PairOperator = std::array<Complex, 16>;

/// Real-coefficient variant; the braiding gate is real.
using RealPairOperator = std::array<double, 16>;

PairOperator to_pair_operator(const DenseMatrix& m);
/// Throws ContractViolation if any entry has a nonzero imaginary part.
RealPairOperator to_real_pair_operator(const DenseMatrix& m);

/// Applies op to qubits (first, first+1), 1-based with qubit 1 the MSB, in
/// place. The local basis order is (bit_first bit_first+1) = 00, 01, 10, 11.
/// Returns the number of 4-amplitude groups transformed, always 2^(n-2).
std::size_t apply_pair(std::span<Complex> amplitudes, int n_qubits, int first,
                       const PairOperator& op);
std::size_t apply_pair(std::span<Complex> amplitudes, int n_qubits, int first,
                       const RealPairOperator& op);

}  // namespace braidq
