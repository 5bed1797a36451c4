// Copyright 2026 The bscz Authors
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

#ifndef BSCZ_ORACLE_HPP_
#define BSCZ_ORACLE_HPP_

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "bscz/detector.hpp"
#include "bscz/hybrid.hpp"

namespace bscz::oracle {

/// Two-mode pure state; amplitudes(n1, n2) over a square truncation.
class TwoModeState {
 public:
  explicit TwoModeState(int truncation) : amp_(Matrix::Zero(truncation, truncation)) {}
  explicit TwoModeState(Matrix amplitudes);

  int truncation() const { return static_cast<int>(amp_.rows()); }
  const Matrix& amplitudes() const { return amp_; }
  Matrix& amplitudes() { return amp_; }
  double squared_norm() const { return amp_.squaredNorm(); }

 private:
  Matrix amp_;
};

/// Exact beam-splitter unitary, a1^dag -> t a1^dag - r a2^dag,
/// a2^dag -> r a1^dag + t a2^dag, applied sector by sector. Raises
/// TruncationError when an input has n1 + n2 >= truncation, since its
/// image would not fit.
TwoModeState bs_apply(const TwoModeState& state, const BeamSplitterSpec& bs);

/// Beam-splitter output of |SMSV>_1 |qubit>_23, kept as one two-mode state
/// per value of the photonic mode 3. The input SMSV keeps photon numbers
/// up to truncation - 2.
class JointOutput {
 public:
  JointOutput(const SqueezingSpec& sq, const BeamSplitterSpec& bs, const DVQubit& qubit, int truncation);

  int truncation() const { return branches_[0].truncation(); }
  /// Mode 1 amplitudes after projecting mode 2 on |k>: row n1, column = mode-3 value.
  Matrix project(int k) const;
  /// Squared norm of project(k).
  double probability(int k) const;

 private:
  TwoModeState branches_[2];
};

struct ProjectedState {
  Matrix amplitudes;
  double probability = 0.0;
};

ProjectedState joint_evolve_project(const SqueezingSpec& sq, const BeamSplitterSpec& bs, const DVQubit& qubit, int k,
                                    int truncation = 128);

/// Expected unnormalized projection from the closed forms,
/// (a_x c_k^{(x)} sqrt(norm_x) / sqrt(cosh s)) |Psi_k^{(x)}> |photon_x>, signs included.
Matrix analytic_projection(const SqueezingSpec& sq, const BeamSplitterSpec& bs, const DVQubit& qubit, int k,
                           int truncation, const SeriesConfig& cfg = {});

using DensityMatrix4 = Eigen::Matrix4d;

DensityMatrix4 pure_density(const Eigen::Vector4d& psi);

/// ||rho^{T_B}||_1 - 1 with the partial transpose over the photonic qubit.
double pt_negativity(const DensityMatrix4& rho);

struct PovmWeights {
  /// Relative weights of true counts k, k + 1, k + 2.
  double weights[3] = {0.0, 0.0, 0.0};
  /// Mass of true counts k + 3 and beyond, relative to the same normalizer.
  double residual = 0.0;
};

PovmWeights povm_oracle(const SqueezingSpec& sq, const BeamSplitterSpec& bs, const DVQubit& qubit, int k,
                        const DetectorSpec& det, int truncation = 128);

/// <Delta_k| rho |Delta_k> for the brute-force mixture of true counts
/// k .. k + max_order heralded as k, built from projected joint states.
double oracle_fidelity(const SqueezingSpec& sq, const BeamSplitterSpec& bs, const DVQubit& qubit, int k,
                       const DetectorSpec& det, int max_order = 2, int truncation = 128);

struct CheckResult {
  std::string name;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  /// Parameters of the sample with the largest deviation.
  std::string worst;
};

struct SuiteOptions {
  int samples = 50;
  int truncation = 128;
  unsigned long long seed = 20260301ULL;
  int jobs = 1;
  /// Raise the truncation per sample until the input SMSV tail is below
  /// kStateTailTolerance.
  bool auto_escalate = false;
};

/// Rows of JointOutput::project(k) that hold every contribution of the
/// retained input: n1 <= truncation - 2 - k.
int complete_rows(int truncation, int k);

/// Cross-checks closed forms against the brute-force evolution on a fixed
/// pseudo-random sample of (S, B, k, a1/a0).
std::vector<CheckResult> run_equivalence_suite(SuiteOptions opts = {});

}  // namespace bscz::oracle

#endif  // BSCZ_ORACLE_HPP_
