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

#include "braidq/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "braidq/errors.hpp"

namespace braidq {

namespace {

constexpr int kMaxLabels = 26;

const PairOperator& yy_pair() {
  static const PairOperator op = to_pair_operator(kron(pauli_y(), pauli_y()));
  return op;
}

const DenseMatrix& yy_dense() {
  static const DenseMatrix m = kron(pauli_y(), pauli_y());
  return m;
}

void require_two_qubits(int n, const char* what) {
  if (n != 2) {
    throw ArgumentError(std::string(what) + " needs a 2-qubit input, got " + std::to_string(n));
  }
}

// Square roots of the clamped eigenvalues of sqrt(rho) flipped sqrt(rho).
LambdaSpectrum lambdas_from(const DenseMatrix& rho, const DenseMatrix& flipped) {
  const DenseMatrix root = psd_sqrt(rho);
  DenseMatrix m = matmul(matmul(root, flipped), root);
  m = 0.5 * (m + dagger(m));
  LambdaSpectrum out;
  for (double ev : hermitian_eigenvalues(m)) {
    if (ev < -tol::kNegativeEigen) {
      throw NumericError("rho rho~ has a negative eigenvalue " + std::to_string(ev));
    }
    if (ev <= tol::kZeroClamp) ev = 0.0;
    out.values.push_back(std::sqrt(ev));
  }
  std::sort(out.values.begin(), out.values.end(), std::greater<>());
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// DensityMatrix

std::string default_labels(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxLabels) {
    throw ArgumentError("cannot label " + std::to_string(n_qubits) + " qubits");
  }
  std::string labels;
  for (int q = 0; q < n_qubits; ++q) labels += static_cast<char>('A' + q);
  return labels;
}

DensityMatrix::DensityMatrix(DenseMatrix matrix, std::string labels)
    : n_qubits_(0), matrix_(std::move(matrix)), labels_(std::move(labels)) {
  if (!matrix_.is_square()) throw DimensionError("density matrix must be square");
  n_qubits_ = qubits_for_dim(matrix_.rows());
  if (labels_.empty()) labels_ = default_labels(n_qubits_);
  if (static_cast<int>(labels_.size()) != n_qubits_) {
    throw ArgumentError("need " + std::to_string(n_qubits_) + " labels, got '" + labels_ + "'");
  }
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_.find(labels_[i], i + 1) != std::string::npos) {
      throw ArgumentError(std::string("duplicate qubit label '") + labels_[i] + "'");
    }
  }
}

int DensityMatrix::position(char label) const {
  const auto at = labels_.find(label);
  if (at == std::string::npos) {
    throw ArgumentError(std::string("no qubit labelled '") + label + "' in '" + labels_ + "'");
  }
  return static_cast<int>(at) + 1;
}

void DensityMatrix::validate() const {
  const double herm = hermiticity_residual(matrix_);
  if (herm > tol::kHermitian) {
    throw ContractViolation("density matrix not Hermitian (" + std::to_string(herm) + ")");
  }
  const Complex tr = trace(matrix_);
  if (std::abs(tr - 1.0) > tol::kHermitian) {
    throw ContractViolation("density matrix trace " + std::to_string(tr.real()) + " != 1");
  }
  const auto ev = hermitian_eigenvalues(matrix_);
  if (ev.back() < -tol::kEigen) {
    throw ContractViolation("density matrix has negative eigenvalue " + std::to_string(ev.back()));
  }
}

const DenseMatrix& pauli_y() {
  static const DenseMatrix y{{0.0, Complex(0, -1)}, {Complex(0, 1), 0.0}};
  return y;
}

DensityMatrix density_from_pure(const StateVector& psi) {
  if (!psi.is_normalized(tol::kHermitian)) {
    throw ContractViolation("state is not normalized (norm " + std::to_string(psi.norm()) + ")");
  }
  return DensityMatrix(outer(psi));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::string_view discard) {
  if (discard.empty()) throw ArgumentError("nothing to trace out");
  const int n = rho.n_qubits();
  std::vector<bool> traced(static_cast<std::size_t>(n), false);
  for (char label : discard) {
    const int pos = rho.position(label);
    if (traced[static_cast<std::size_t>(pos - 1)]) {
      throw ArgumentError(std::string("qubit '") + label + "' listed twice");
    }
    traced[static_cast<std::size_t>(pos - 1)] = true;
  }
  // Bit positions (from the LSB) of kept and traced qubits, most significant first.
  std::vector<int> kept_bits;
  std::vector<int> traced_bits;
  std::string kept_labels;
  for (int q = 1; q <= n; ++q) {
    if (traced[static_cast<std::size_t>(q - 1)]) {
      traced_bits.push_back(n - q);
    } else {
      kept_bits.push_back(n - q);
      kept_labels += rho.labels()[static_cast<std::size_t>(q - 1)];
    }
  }
  if (kept_bits.empty()) throw ArgumentError("cannot trace out every qubit");

  auto scatter = [](std::size_t value, const std::vector<int>& bits) {
    std::size_t out = 0;
    const std::size_t k = bits.size();
    for (std::size_t b = 0; b < k; ++b) {
      if ((value >> (k - 1 - b)) & 1U) out |= std::size_t{1} << bits[b];
    }
    return out;
  };

  const std::size_t kept_dim = std::size_t{1} << kept_bits.size();
  const std::size_t traced_dim = std::size_t{1} << traced_bits.size();
  std::vector<std::size_t> kept_index(kept_dim);
  std::vector<std::size_t> traced_index(traced_dim);
  for (std::size_t v = 0; v < kept_dim; ++v) kept_index[v] = scatter(v, kept_bits);
  for (std::size_t v = 0; v < traced_dim; ++v) traced_index[v] = scatter(v, traced_bits);

  const DenseMatrix& m = rho.matrix();
  DenseMatrix out(kept_dim, kept_dim);
  for (std::size_t r = 0; r < kept_dim; ++r) {
    for (std::size_t c = 0; c < kept_dim; ++c) {
      Complex acc{};
      for (std::size_t t : traced_index) acc += m(kept_index[r] | t, kept_index[c] | t);
      out(r, c) = acc;
    }
  }
  return DensityMatrix(std::move(out), kept_labels);
}

// ---------------------------------------------------------------------------
// Two-qubit concurrence

StateVector spin_flip_pure_2q(const StateVector& psi) {
  require_two_qubits(psi.n_qubits(), "spin flip");
  return matvec(yy_dense(), conjugate(psi));
}

double concurrence_pure_2q(const StateVector& psi) {
  require_two_qubits(psi.n_qubits(), "pure concurrence");
  return std::abs(inner(psi, spin_flip_pure_2q(psi)));
}

DensityMatrix spin_flip_density_2q(const DensityMatrix& rho) {
  require_two_qubits(rho.n_qubits(), "spin flip");
  return DensityMatrix(matmul(matmul(yy_dense(), conjugate(rho.matrix())), yy_dense()),
                       rho.labels());
}

double LambdaSpectrum::concurrence() const {
  if (values.empty()) return 0.0;
  const double rest = std::accumulate(values.begin() + 1, values.end(), 0.0);
  return std::max(values.front() - rest, 0.0);
}

LambdaSpectrum wootters_lambdas(const DensityMatrix& rho) {
  require_two_qubits(rho.n_qubits(), "Wootters lambdas");
  return lambdas_from(rho.matrix(), spin_flip_density_2q(rho).matrix());
}

double concurrence_mixed_2q(const DensityMatrix& rho) {
  return wootters_lambdas(rho).concurrence();
}

// ---------------------------------------------------------------------------
// Peres-Horodecki

DenseMatrix partial_transpose(const DensityMatrix& rho, char label) {
  const int q = rho.position(label);
  const std::size_t bit = std::size_t{1} << (rho.n_qubits() - q);
  const DenseMatrix& m = rho.matrix();
  DenseMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      // Exchange the chosen qubit's bit between row and column index.
      const std::size_t rb = r & bit;
      const std::size_t cb = c & bit;
      out((r & ~bit) | cb, (c & ~bit) | rb) = m(r, c);
    }
  }
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kSeparable:
      return "separable";
    case Verdict::kEntangled:
      return "entangled";
    case Verdict::kPptHolds:
      return "ppt-holds";
  }
  return "unknown";
}

PptResult ppt_check(const DensityMatrix& rho, char label, double threshold) {
  PptResult result;
  result.eigenvalues = hermitian_eigenvalues(partial_transpose(rho, label));
  const bool positive = result.eigenvalues.back() >= threshold;
  for (double& ev : result.eigenvalues) {
    if (ev < 0.0 && ev >= threshold) ev = 0.0;
  }
  if (!positive) {
    result.verdict = Verdict::kEntangled;
    result.note = "negative partial transpose certifies entanglement";
  } else if (rho.n_qubits() == 2) {
    result.verdict = Verdict::kSeparable;
    result.note = "PPT is necessary and sufficient for two qubits";
  } else {
    result.verdict = Verdict::kPptHolds;
    result.note = "necessary condition only beyond two qubits";
  }
  return result;
}

// ---------------------------------------------------------------------------
// Generalized spin flip

DenseMatrix generalized_flip_operator(int n_qubits, int dense_cap) {
  if (n_qubits < 2) throw ArgumentError("generalized flip needs n >= 2");
  if (n_qubits > dense_cap) {
    throw SizeError("generalized flip for " + std::to_string(n_qubits) +
                    " qubits exceeds the dense cap of " + std::to_string(dense_cap));
  }
  DenseMatrix f = DenseMatrix::identity(std::size_t{1} << n_qubits);
  for (int i = 1; i <= n_qubits - 1; ++i) {
    const DenseMatrix left = DenseMatrix::identity(std::size_t{1} << (i - 1));
    const DenseMatrix right = DenseMatrix::identity(std::size_t{1} << (n_qubits - i - 1));
    f = matmul(f, kron(kron(left, yy_dense()), right));
  }
  return f;
}

StateVector generalized_spin_flip(const StateVector& psi) {
  const int n = psi.n_qubits();
  if (n < 2) throw ArgumentError("generalized flip needs n >= 2");
  StateVector out = conjugate(psi);
  // F = P_1 P_2 ... P_{n-1}: rightmost factor acts first.
  for (int i = n - 1; i >= 1; --i) apply_pair(out.amplitudes(), n, i, yy_pair());
  return out;
}

double generalized_concurrence_pure(const StateVector& psi) {
  if (!psi.is_normalized(tol::kHermitian)) {
    throw ContractViolation("state is not normalized (norm " + std::to_string(psi.norm()) + ")");
  }
  return std::abs(inner(psi, generalized_spin_flip(psi)));
}

LambdaSpectrum generalized_lambdas_mixed(const DensityMatrix& rho, int dense_cap) {
  const DenseMatrix f = generalized_flip_operator(rho.n_qubits(), dense_cap);
  return lambdas_from(rho.matrix(), matmul(matmul(f, conjugate(rho.matrix())), f));
}

// ---------------------------------------------------------------------------
// Report

EntanglementReport analyze(const StateVector& psi, std::string_view discard,
                           std::string input_label, const Thresholds& thresholds,
                           int eigen_cap) {
  EntanglementReport report;
  report.input_label = std::move(input_label);
  report.thresholds = thresholds;

  const int n = psi.n_qubits();
  if (static_cast<int>(discard.size()) >= n) {
    throw ArgumentError("cannot trace out every qubit");
  }
  const int retained = n - static_cast<int>(discard.size());
  if (retained > eigen_cap) {
    throw SizeError(std::to_string(retained) + " retained qubits exceed the analysis cap of " +
                    std::to_string(eigen_cap));
  }

  const DensityMatrix full = density_from_pure(psi);
  const DensityMatrix rho = discard.empty() ? full : partial_trace(full, discard);
  report.retained = rho.labels();

  if (rho.n_qubits() == 1) {
    report.method = "none";
    report.verdict = Verdict::kSeparable;
    report.note = "a single qubit carries no bipartite entanglement";
    return report;
  }

  if (discard.empty()) {
    report.method = "generalized-pure";
    report.lambda_spectrum = generalized_lambdas_mixed(rho);
    report.concurrence = generalized_concurrence_pure(psi);
  } else if (rho.n_qubits() == 2) {
    report.method = "wootters";
    report.lambda_spectrum = wootters_lambdas(rho);
    report.concurrence = report.lambda_spectrum.concurrence();
  } else {
    report.method = "generalized";
    report.lambda_spectrum = generalized_lambdas_mixed(rho);
    report.concurrence = report.lambda_spectrum.concurrence();
  }

  report.pt_subsystem = rho.labels().back();
  auto ppt = ppt_check(rho, report.pt_subsystem, thresholds.ppt);
  report.pt_eigenvalues = std::move(ppt.eigenvalues);
  report.verdict = ppt.verdict;
  report.note = std::move(ppt.note);
  return report;
}

}  // namespace braidq
