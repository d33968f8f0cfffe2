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

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include "braidq/errors.hpp"

namespace braidq {

namespace {

void require_finite(std::span<const Complex> values) {
  for (const auto& v : values) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw ContractViolation("non-finite entry");
    }
  }
}

std::string shape(std::size_t r, std::size_t c) {
  return std::to_string(r) + "x" + std::to_string(c);
}

}  // namespace

// ---------------------------------------------------------------------------
// DenseMatrix

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) {
    throw DimensionError("matrix dimensions must be positive");
  }
}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows == 0 || cols == 0) {
    throw DimensionError("matrix dimensions must be positive");
  }
  if (data_.size() != rows * cols) {
    throw DimensionError("entry count " + std::to_string(data_.size()) +
                         " does not match " + shape(rows, cols));
  }
  require_finite(data_);
}

DenseMatrix::DenseMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  if (rows_ == 0 || cols_ == 0) {
    throw DimensionError("matrix dimensions must be positive");
  }
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionError("ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

DenseMatrix DenseMatrix::identity(std::size_t dim) {
  DenseMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::diagonal(std::span<const double> values) {
  DenseMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

DenseMatrix& DenseMatrix::operator*=(Complex s) {
  for (auto& v : data_) v *= s;
  return *this;
}

DenseMatrix& DenseMatrix::operator+=(const DenseMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw DimensionError("cannot add " + shape(rows_, cols_) + " and " +
                         shape(other.rows_, other.cols_));
  }
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

DenseMatrix& DenseMatrix::operator-=(const DenseMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw DimensionError("cannot subtract " + shape(other.rows_, other.cols_) +
                         " from " + shape(rows_, cols_));
  }
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

DenseMatrix operator*(Complex s, DenseMatrix m) {
  m *= s;
  return m;
}

DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) {
  a += b;
  return a;
}

DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) {
  a -= b;
  return a;
}

// ---------------------------------------------------------------------------
// StateVector

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > kDefaultMaxQubits) {
    throw SizeError("qubit count " + std::to_string(n_qubits) + " outside [1, " +
                    std::to_string(kDefaultMaxQubits) + "]");
  }
  amps_.assign(std::size_t{1} << n_qubits, Complex{});
  amps_[0] = 1.0;
}

StateVector::StateVector(int n_qubits, std::vector<Complex> amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
  if (n_qubits < 1 || n_qubits > kDefaultMaxQubits) {
    throw SizeError("qubit count " + std::to_string(n_qubits) + " outside [1, " +
                    std::to_string(kDefaultMaxQubits) + "]");
  }
  if (amps_.size() != (std::size_t{1} << n_qubits)) {
    throw DimensionError("state of " + std::to_string(n_qubits) + " qubits needs " +
                         std::to_string(std::size_t{1} << n_qubits) + " amplitudes, got " +
                         std::to_string(amps_.size()));
  }
  require_finite(amps_);
}

StateVector StateVector::basis(int n_qubits, std::uint64_t zero_based_index) {
  StateVector psi(n_qubits);
  if (zero_based_index >= psi.dim()) {
    throw RangeError("basis index " + std::to_string(zero_based_index) + " out of range for " +
                     std::to_string(n_qubits) + " qubits");
  }
  psi[0] = 0.0;
  psi[zero_based_index] = 1.0;
  return psi;
}

double StateVector::norm() const {
  double sum = 0.0;
  for (const auto& a : amps_) sum += std::norm(a);
  return std::sqrt(sum);
}

bool StateVector::is_normalized(double tolerance) const {
  return std::abs(norm() - 1.0) <= tolerance;
}

// ---------------------------------------------------------------------------
// Products

int qubits_for_dim(std::size_t dim) {
  if (dim < 2 || !std::has_single_bit(dim)) {
    throw DimensionError("dimension " + std::to_string(dim) + " is not a power of two >= 2");
  }
  return std::countr_zero(dim);
}

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b, int max_qubits) {
  const std::size_t rows = a.rows() * b.rows();
  const std::size_t cols = a.cols() * b.cols();
  const std::size_t cap = std::size_t{1} << max_qubits;
  if (rows > cap || cols > cap) {
    throw SizeError("kron result " + shape(rows, cols) + " exceeds " +
                    std::to_string(max_qubits) + "-qubit cap");
  }
  DenseMatrix out(rows, cols);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
      }
    }
  }
  return out;
}

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("cannot multiply " + shape(a.rows(), a.cols()) + " by " +
                         shape(b.rows(), b.cols()));
  }
  DenseMatrix out(a.rows(), b.cols());
  // i-k-j order; structurally zero entries of a (common in gate products)
  // contribute nothing and are skipped.
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

StateVector matvec(const DenseMatrix& m, const StateVector& psi) {
  if (m.cols() != psi.dim() || m.rows() != psi.dim()) {
    throw DimensionError("cannot apply " + shape(m.rows(), m.cols()) + " to a state of dim " +
                         std::to_string(psi.dim()));
  }
  std::vector<Complex> out(psi.dim());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Complex acc{};
    for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j) * psi[j];
    out[i] = acc;
  }
  return StateVector(psi.n_qubits(), std::move(out));
}

DenseMatrix dagger(const DenseMatrix& m) {
  DenseMatrix out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = std::conj(m(i, j));
  return out;
}

DenseMatrix transpose(const DenseMatrix& m) {
  DenseMatrix out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = m(i, j);
  return out;
}

DenseMatrix conjugate(const DenseMatrix& m) {
  DenseMatrix out = m;
  for (auto& v : out.data()) v = std::conj(v);
  return out;
}

StateVector conjugate(const StateVector& psi) {
  StateVector out = psi;
  for (auto& v : out.amplitudes()) v = std::conj(v);
  return out;
}

Complex trace(const DenseMatrix& m) {
  if (!m.is_square()) throw DimensionError("trace of non-square matrix");
  Complex t{};
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

Complex inner(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) throw DimensionError("inner product of states with different dims");
  Complex acc{};
  for (std::size_t i = 0; i < a.dim(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

DenseMatrix outer(const StateVector& psi) {
  DenseMatrix out(psi.dim(), psi.dim());
  for (std::size_t i = 0; i < psi.dim(); ++i)
    for (std::size_t j = 0; j < psi.dim(); ++j) out(i, j) = psi[i] * std::conj(psi[j]);
  return out;
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("cannot compare " + shape(a.rows(), a.cols()) + " with " +
                         shape(b.rows(), b.cols()));
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i)
    worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
  return worst;
}

double max_abs_diff(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) throw DimensionError("cannot compare states with different dims");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

double unitarity_residual(const DenseMatrix& m) {
  if (!m.is_square()) throw DimensionError("unitarity of non-square matrix");
  return max_abs_diff(matmul(dagger(m), m), DenseMatrix::identity(m.rows()));
}

double hermiticity_residual(const DenseMatrix& m) {
  if (!m.is_square()) throw DimensionError("hermiticity of non-square matrix");
  return max_abs_diff(m, dagger(m));
}

// ---------------------------------------------------------------------------
// Hermitian eigenproblem

EigenDecomposition hermitian_eigen(const DenseMatrix& m, int max_sweeps) {
  if (!m.is_square()) throw DimensionError("eigen of non-square matrix");
  const double herm = hermiticity_residual(m);
  if (herm > tol::kHermitian) {
    throw ContractViolation("matrix is not Hermitian (max|m - m^dagger| = " +
                            std::to_string(herm) + ")");
  }
  const std::size_t n = m.rows();
  // Work on the exactly Hermitian part.
  DenseMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
    a(i, i) = a(i, i).real();
  }
  DenseMatrix v = DenseMatrix::identity(n);

  double frob = 0.0;
  for (const auto& x : a.data()) frob += std::norm(x);
  const double stop = std::max(frob, 1e-300) * 1e-30;

  auto off_norm = [&] {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += 2.0 * std::norm(a(p, q));
    return off;
  };

  bool converged = off_norm() <= stop;
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        // Rotate the phase of a(p,q) away, then zero the real 2x2 block:
        // J = [[c, s], [-s e^{-i phi}, c e^{-i phi}]] on columns (p, q).
        const Complex phase = apq / mag;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const Complex jpp = c;
        const Complex jpq = s;
        const Complex jqp = -s * std::conj(phase);
        const Complex jqq = c * std::conj(phase);

        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * jpp + akq * jqp;
          a(k, q) = akp * jpq + akq * jqq;
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = vkp * jpp + vkq * jqp;
          v(k, q) = vkp * jpq + vkq * jqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
          a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
    converged = off_norm() <= stop;
  }
  if (!converged) {
    throw NumericError("Jacobi eigensolver did not converge in " + std::to_string(max_sweeps) +
                       " sweeps");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x).real() > a(y, y).real();
  });
  EigenDecomposition out{std::vector<double>(n), DenseMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const DenseMatrix& m) {
  return hermitian_eigen(m).values;
}

DenseMatrix psd_sqrt(const DenseMatrix& m) {
  auto eig = hermitian_eigen(m);
  const std::size_t n = m.rows();
  std::vector<double> roots(n);
  for (std::size_t k = 0; k < n; ++k) {
    double ev = eig.values[k];
    if (ev < -tol::kNegativeEigen) {
      throw ContractViolation("matrix is not positive semidefinite (eigenvalue " +
                              std::to_string(ev) + ")");
    }
    if (std::abs(ev) <= tol::kZeroClamp || ev < 0.0) ev = 0.0;
    roots[k] = std::sqrt(ev);
  }
  DenseMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Complex acc{};
      for (std::size_t k = 0; k < n; ++k) {
        if (roots[k] == 0.0) continue;
        acc += eig.vectors(i, k) * roots[k] * std::conj(eig.vectors(j, k));
      }
      out(i, j) = acc;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Pair kernel

PairOperator to_pair_operator(const DenseMatrix& m) {
  if (m.rows() != 4 || m.cols() != 4) throw DimensionError("pair operator must be 4x4");
  PairOperator op;
  std::copy(m.data().begin(), m.data().end(), op.begin());
  return op;
}

RealPairOperator to_real_pair_operator(const DenseMatrix& m) {
  if (m.rows() != 4 || m.cols() != 4) throw DimensionError("pair operator must be 4x4");
  RealPairOperator op;
  for (std::size_t k = 0; k < 16; ++k) {
    if (m.data()[k].imag() != 0.0) throw ContractViolation("pair operator is not real");
    op[k] = m.data()[k].real();
  }
  return op;
}

namespace {

template <typename Op>
std::size_t apply_pair_impl(std::span<Complex> amplitudes, int n_qubits, int first,
                            const Op& op) {
  if (n_qubits < 2) throw RangeError("pair operator needs at least 2 qubits");
  if (first < 1 || first > n_qubits - 1) {
    throw RangeError("qubit pair (" + std::to_string(first) + ", " + std::to_string(first + 1) +
                     ") out of range for " + std::to_string(n_qubits) + " qubits");
  }
  if (amplitudes.size() != (std::size_t{1} << n_qubits)) {
    throw DimensionError("amplitude span does not match qubit count");
  }
  // Qubit q sits at bit position n - q; the pair's lower bit is qubit first+1.
  const unsigned low = static_cast<unsigned>(n_qubits - first - 1);
  const std::size_t low_mask = (std::size_t{1} << low) - 1;
  const std::size_t stride = std::size_t{1} << low;
  const std::size_t groups = std::size_t{1} << (n_qubits - 2);
  Complex* amps = amplitudes.data();
  for (std::size_t g = 0; g < groups; ++g) {
    const std::size_t base = ((g & ~low_mask) << 2) | (g & low_mask);
    Complex* a0 = amps + base;
    Complex* a1 = a0 + stride;
    Complex* a2 = a1 + stride;
    Complex* a3 = a2 + stride;
    const Complex in0 = *a0;
    const Complex in1 = *a1;
    const Complex in2 = *a2;
    const Complex in3 = *a3;
    *a0 = op[0] * in0 + op[1] * in1 + op[2] * in2 + op[3] * in3;
    *a1 = op[4] * in0 + op[5] * in1 + op[6] * in2 + op[7] * in3;
    *a2 = op[8] * in0 + op[9] * in1 + op[10] * in2 + op[11] * in3;
    *a3 = op[12] * in0 + op[13] * in1 + op[14] * in2 + op[15] * in3;
  }
  return groups;
}

}  // namespace

std::size_t apply_pair(std::span<Complex> amplitudes, int n_qubits, int first,
                       const PairOperator& op) {
  return apply_pair_impl(amplitudes, n_qubits, first, op);
}

std::size_t apply_pair(std::span<Complex> amplitudes, int n_qubits, int first,
                       const RealPairOperator& op) {
  return apply_pair_impl(amplitudes, n_qubits, first, op);
}

}  // namespace braidq
