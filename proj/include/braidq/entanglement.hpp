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

#include <string>
#include <string_view>
#include <vector>

#include "braidq/braid_algebra.hpp"
#include "braidq/linalg.hpp"

namespace braidq {

/// PT eigenvalues at or above this count as non-negative.
inline constexpr double kDefaultPptThreshold = -1e-10;
/// Largest retained-qubit count for eigenvalue-based analysis.
inline constexpr int kDefaultEigenCap = 8;

/// Density matrix over a labelled set of qubits. Labels are single letters
/// ('A' = qubit 1, 'B' = qubit 2, ...) and survive partial traces, so the
/// reduced state of qubits A and C keeps labels "AC".
class DensityMatrix {
 public:
  /// Labels default to A, B, C, ... in qubit order.
  explicit DensityMatrix(DenseMatrix matrix, std::string labels = {});

  int n_qubits() const noexcept { return n_qubits_; }
  const DenseMatrix& matrix() const noexcept { return matrix_; }
  const std::string& labels() const noexcept { return labels_; }

  /// 1-based position of a label; throws ArgumentError if absent.
  int position(char label) const;

  /// Throws ContractViolation unless Hermitian within 1e-10, unit trace
  /// within 1e-10 and all eigenvalues >= -1e-9.
  void validate() const;

 private:
  int n_qubits_;
  DenseMatrix matrix_;
  std::string labels_;
};

std::string default_labels(int n_qubits);

const DenseMatrix& pauli_y();

/// |psi><psi|; psi must be normalized within 1e-10.
DensityMatrix density_from_pure(const StateVector& psi);

/// Traces out the qubits named in `discard`; the rest keep their order.
DensityMatrix partial_trace(const DensityMatrix& rho, std::string_view discard);

/// (sigma_y (x) sigma_y) psi*
StateVector spin_flip_pure_2q(const StateVector& psi);
/// |<psi|psi~>|
double concurrence_pure_2q(const StateVector& psi);

/// (sigma_y (x) sigma_y) rho* (sigma_y (x) sigma_y)
DensityMatrix spin_flip_density_2q(const DensityMatrix& rho);

struct LambdaSpectrum {
  std::vector<double> values;  // descending, non-negative

  /// max(lambda_1 - sum of the rest, 0)
  double concurrence() const;
};

/// Square roots of the eigenvalues of rho * rho~, descending, taken from the
/// Hermitian matrix sqrt(rho) rho~ sqrt(rho).
LambdaSpectrum wootters_lambdas(const DensityMatrix& rho);
double concurrence_mixed_2q(const DensityMatrix& rho);

/// Transposes the indices of one labelled qubit.
DenseMatrix partial_transpose(const DensityMatrix& rho, char label);

enum class Verdict { kSeparable, kEntangled, kPptHolds };

std::string to_string(Verdict v);

struct PptResult {
  std::vector<double> eigenvalues;  // descending, [threshold, 0) clamped to 0
  Verdict verdict = Verdict::kSeparable;
  std::string note;
};

/// Peres-Horodecki test. Positivity is a full separability certificate only
/// for two qubits; larger systems report Verdict::kPptHolds.
PptResult ppt_check(const DensityMatrix& rho, char label,
                    double threshold = kDefaultPptThreshold);

/// Ordered product over i = 1..n-1 of the adjacent-pair flips
/// I^(i-1) (x) sigma_y (x) sigma_y (x) I^(n-i-1).
DenseMatrix generalized_flip_operator(int n_qubits, int dense_cap = kDefaultDenseCap);

/// F psi*, with F applied pair by pair without forming the 2^n matrix.
StateVector generalized_spin_flip(const StateVector& psi);

/// |<psi| F psi*>|
double generalized_concurrence_pure(const StateVector& psi);

/// Lambda spectrum of rho * (F rho* F) through sqrt(rho) (F rho* F) sqrt(rho).
LambdaSpectrum generalized_lambdas_mixed(const DensityMatrix& rho,
                                         int dense_cap = kDefaultDenseCap);

struct Thresholds {
  double construction = tol::kConstruction;
  double eigen = tol::kEigen;
  double ppt = kDefaultPptThreshold;
};

struct EntanglementReport {
  std::string input_label;
  std::string retained;        // labels of the analysed qubits
  std::string method;          // "wootters", "generalized", "generalized-pure", "none"
  LambdaSpectrum lambda_spectrum;
  double concurrence = 0.0;
  char pt_subsystem = '\0';    // '\0' when no PT was taken
  std::vector<double> pt_eigenvalues;
  Verdict verdict = Verdict::kSeparable;
  std::string note;
  Thresholds thresholds;
};

/// Traces `discard` out of |psi><psi| and analyses what remains:
///  - nothing discarded: generalized pure concurrence, generalized lambdas
///  - two qubits left: Wootters lambdas/concurrence and a definitive PPT
///  - more left: generalized lambdas and PPT as a necessary condition
/// PT is taken on the last retained qubit. Eigen-based quantities need at
/// most eigen_cap retained qubits.
EntanglementReport analyze(const StateVector& psi, std::string_view discard,
                           std::string input_label, const Thresholds& thresholds = {},
                           int eigen_cap = kDefaultEigenCap);

}  // namespace braidq
