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

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Tolerances are fixed here and never read from the environment.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "braidq/bell_states.hpp"
#include "braidq/braid_algebra.hpp"
#include "braidq/braid_word.hpp"
#include "braidq/entanglement.hpp"
#include "test_support.hpp"

namespace {

using namespace braidq;
using Clock = std::chrono::steady_clock;

constexpr double kConstructionTol = 1e-12;
constexpr double kGramTol = 1e-11;
constexpr double kEigenTol = 1e-9;
constexpr double kOracleTol = 1e-11;

int g_failures = 0;

void report(int id, const char* name, bool pass, const std::string& detail) {
  std::printf("%s  %2d  %-28s %s\n", pass ? "PASS" : "FAIL", id, name, detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

double spectrum_error(const std::vector<double>& got, const std::vector<double>& want) {
  if (got.size() != want.size()) return INFINITY;
  double worst = 0.0;
  for (std::size_t k = 0; k < want.size(); ++k) worst = std::max(worst, std::abs(got[k] - want[k]));
  return worst;
}

void yang_baxter() {
  const auto t0 = Clock::now();
  const double residual = verify_yang_baxter();
  const double ms = ms_since(t0);
  report(1, "yang-baxter", residual <= kConstructionTol && ms < 1.0,
         fmt("residual=%.3g", residual) + fmt(" time=%.3fms (limit 1ms)", ms));
}

void artin() {
  const auto t0 = Clock::now();
  double worst = 0.0;
  std::size_t checks = 0;
  for (int n = 3; n <= 8; ++n) {
    const ArtinReport r = verify_artin_relations(n, 20, 1000 + static_cast<std::uint64_t>(n));
    worst = std::max(worst, r.max_residual());
    checks += r.entries.size();
  }
  const double ms = ms_since(t0);
  report(2, "artin-relations n=3..8", worst <= kConstructionTol && ms < 1000.0,
         fmt("max_residual=%.3g", worst) + " relation_checks=" + std::to_string(checks) +
             fmt(" time=%.1fms (limit 1000ms)", ms));
}

void product_s1s2() {
  const double err =
      max_abs_diff(compile(parse("s1 s2", 3), 3), 0.5 * testing::s1s2_times2());
  report(3, "s1*s2 three-qubit matrix", err <= kConstructionTol, fmt("max_err=%.3g", err));
}

void bell_three() {
  double err = 0.0;
  for (std::uint64_t k = 1; k <= 8; ++k) {
    const StateVector want = testing::state_from_terms(3, testing::bell3_terms()[k - 1], 0.5);
    err = std::max(err, max_abs_diff(bell_state(3, k), want));
  }
  const double gram = gram_deviation(bell_basis(3));
  report(4, "three-qubit bell basis", err <= kConstructionTol && gram <= kGramTol,
         fmt("max_err=%.3g", err) + fmt(" gram_dev=%.3g", gram));
}

void bell_four() {
  const StateVector want =
      testing::state_from_terms(4, testing::bell4_first_terms(), 1.0 / std::sqrt(8.0));
  const double err = max_abs_diff(bell_state(4, 1), want);
  const double gram = gram_deviation(bell_basis(4));
  report(5, "four-qubit bell state", err <= kConstructionTol && gram <= kGramTol,
         fmt("max_err=%.3g", err) + fmt(" gram_dev=%.3g", gram));
}

void reduced_three() {
  const DensityMatrix rho = partial_trace(density_from_pure(bell_state(3, 1)), "C");
  const double err = max_abs_diff(rho.matrix(), 0.25 * testing::rho_ab_times4());
  const LambdaSpectrum lambdas = wootters_lambdas(rho);
  const double lerr = spectrum_error(lambdas.values, {0.5, 0.5, 0.0, 0.0});
  const double c = concurrence_mixed_2q(rho);
  report(6, "reduced state and lambdas",
         err <= kConstructionTol && lerr <= kEigenTol && std::abs(c) <= kEigenTol,
         fmt("rho_err=%.3g", err) + fmt(" lambda_err=%.3g", lerr) + fmt(" concurrence=%.3g", c));
}

void partial_transpose_test() {
  const DensityMatrix rho = partial_trace(density_from_pure(bell_state(3, 1)), "C");
  const PptResult ppt = ppt_check(rho, 'B');
  const double perr = spectrum_error(ppt.eigenvalues, {0.5, 0.5, 0.0, 0.0});

  const double h = 1.0 / std::sqrt(2.0);
  const DensityMatrix bell = density_from_pure(StateVector(2, {h, 0, 0, -h}));
  const PptResult control = ppt_check(bell, 'B');
  const double min_ev = control.eigenvalues.back();
  const double c = concurrence_mixed_2q(bell);

  const bool pass = perr <= kEigenTol && ppt.verdict == Verdict::kSeparable &&
                    std::abs(min_ev + 0.5) <= kEigenTol && std::abs(c - 1.0) <= kEigenTol &&
                    control.verdict == Verdict::kEntangled;
  report(7, "partial transpose", pass,
         fmt("pt_err=%.3g", perr) + " verdict=" + to_string(ppt.verdict) +
             fmt(" control_min_ev=%.12g", min_ev) + fmt(" control_c=%.12g", c));
}

void generalized_pure() {
  double worst = 0.0;
  int states = 0;
  for (int n = 3; n <= 4; ++n) {
    for (std::uint64_t k = 1; k <= (std::uint64_t{1} << n); ++k) {
      worst = std::max(worst, std::abs(generalized_concurrence_pure(bell_state(n, k)) - 1.0));
      ++states;
    }
  }
  report(8, "generalized pure concurrence", worst <= kEigenTol,
         "states=" + std::to_string(states) + fmt(" max|C-1|=%.3g", worst));
}

void four_qubit_lambdas() {
  const DensityMatrix abc = partial_trace(density_from_pure(bell_state(4, 1)), "D");
  const LambdaSpectrum s = generalized_lambdas_mixed(abc);
  const double err = spectrum_error(s.values, {0.5, 0.5, 0, 0, 0, 0, 0, 0});
  report(9, "four-qubit traced lambdas", err <= kEigenTol,
         fmt("lambda_err=%.3g", err) + fmt(" concurrence=%.3g", s.concurrence()));
}

void separability_sweeps() {
  int cases = 0;
  int failures = 0;
  double worst_c = 0.0;
  auto check = [&](const DensityMatrix& rho) {
    const double c = concurrence_mixed_2q(rho);
    const PptResult ppt = ppt_check(rho, rho.labels().back());
    worst_c = std::max(worst_c, std::abs(c));
    if (std::abs(c) > kEigenTol || ppt.verdict != Verdict::kSeparable) ++failures;
    ++cases;
  };
  for (std::uint64_t k = 1; k <= 8; ++k) {
    const DensityMatrix full = density_from_pure(bell_state(3, k));
    for (const char* d : {"A", "B", "C"}) check(partial_trace(full, d));
  }
  for (std::uint64_t k = 1; k <= 16; ++k) {
    const DensityMatrix full = density_from_pure(bell_state(4, k));
    for (const char* d : {"CD", "BD", "BC", "AD", "AC", "AB"}) check(partial_trace(full, d));
  }
  report(10, "separability sweeps", cases == 24 + 96 && failures == 0,
         "cases=" + std::to_string(cases) + " failures=" + std::to_string(failures) +
             fmt(" max_concurrence=%.3g", worst_c));
}

void word_oracles() {
  std::mt19937_64 rng(20260101);
  double apply_err = 0.0;
  double rewrite_err = 0.0;
  int words = 0;
  for (int n = 2; n <= 8; ++n) {
    std::uniform_int_distribution<int> len(0, 20);
    std::uniform_int_distribution<int> pick(1, n - 1);
    std::bernoulli_distribution inv(0.5);
    for (int trial = 0; trial < 50; ++trial) {
      BraidWord w{n, {}};
      const int l = len(rng);
      for (int k = 0; k < l; ++k) {
        w.letters.push_back({pick(rng), inv(rng) ? Sign::kInverse : Sign::kPositive});
      }
      const DenseMatrix m = compile(w, n);
      const StateVector psi = testing::random_unit_state(n, rng);
      apply_err = std::max(apply_err, max_abs_diff(apply(w, psi), matvec(m, psi)));
      rewrite_err = std::max(rewrite_err, max_abs_diff(m, compile(free_reduce(w), n)));
      rewrite_err = std::max(rewrite_err, max_abs_diff(m, compile(commute_normalize(w), n)));
      ++words;
    }
  }
  report(11, "apply/compile/rewrite oracle", apply_err <= kOracleTol && rewrite_err <= kOracleTol,
         "words=" + std::to_string(words) + fmt(" apply_err=%.3g", apply_err) +
             fmt(" rewrite_err=%.3g", rewrite_err));
}

void structure(Clock::time_point suite_start) {
  bool ok = true;
  std::size_t states = 0;
  for (int n = 2; n <= 8; ++n) {
    const TermStructureReport r = term_structure_report(bell_basis(n), kConstructionTol);
    ok = ok && r.ok;
    states += r.states.size();
  }
  const double seconds = ms_since(suite_start) / 1000.0;
  report(12, "bell term structure n=2..8", ok && seconds < 60.0,
         "states=" + std::to_string(states) + fmt(" suite_time=%.2fs (limit 60s)", seconds));
}

}  // namespace

int main() {
  const auto start = Clock::now();
  yang_baxter();
  artin();
  product_s1s2();
  bell_three();
  bell_four();
  reduced_three();
  partial_transpose_test();
  generalized_pure();
  four_qubit_lambdas();
  separability_sweeps();
  word_oracles();
  structure(start);
  std::printf("%s: %d of 12 criteria failed\n", g_failures ? "FAIL" : "PASS", g_failures);
  return g_failures == 0 ? 0 : 1;
}
