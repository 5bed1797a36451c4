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

#include "bscz/hybrid.hpp"

#include <algorithm>
#include <cmath>

#include "bscz/error.hpp"

namespace bscz {

namespace {

void check_args(double y1, double B, int k) {
  if (!(y1 >= 0.0 && y1 < 0.5)) throw DomainError("reduced squeezing y1 must lie in [0, 1/2)");
  if (!(B > 0.0)) throw DomainError("beam-splitter parameter B must be positive");
  if (k < 0) throw DomainError("photon count k must be nonnegative");
}

double log_pow(double x, double e) { return e == 0.0 ? 0.0 : e * std::log(x); }

}  // namespace

double amplitude_c0(double y1, double B, int k) {
  check_args(y1, B, k);
  const double mag = std::exp(log_pow(y1 * B, 0.5 * k) - 0.5 * log_factorial(k));
  return k % 2 == 0 ? mag : -mag;
}

double amplitude_c1(double y1, double B, int k) {
  check_args(y1, B, k);
  if (k == 0) return std::sqrt(B / (1.0 + B));
  const double mag = std::exp(log_pow(y1 * B, 0.5 * (k - 1)) + std::log(static_cast<double>(k)) -
                              0.5 * log_factorial(k) - 0.5 * std::log1p(B));
  return k % 2 == 0 ? -mag : mag;
}

BranchWeights branch_weights(double y1, double B, int k, const SeriesConfig& cfg) {
  check_args(y1, B, k);
  BranchWeights w;
  const auto one = [](int) { return 1.0; };
  // The prefactors c^2 enter the series as log scales so that large k
  // does not overflow Z^{(k)}.
  if (k == 0 || y1 > 0.0) {
    w.subtract = detail::z_series(y1, k, 0, one, one, cfg, log_pow(y1 * B, k) - log_factorial(k));
  }
  if (k == 0) {
    const double c1 = amplitude_c1(y1, B, 0);
    w.add_subtract = c1 * c1 * g1_norm(y1, B, 0, cfg);
  } else if (k == 1 || y1 > 0.0) {
    const double bk = B / k;
    const double log_c1_sq = log_pow(y1 * B, k - 1) + 2.0 * std::log(static_cast<double>(k)) - log_factorial(k) -
                             std::log1p(B);
    w.add_subtract = detail::z_series(
        y1, k - 1, 0,
        [bk](int p) {
          const double f = 1.0 - bk * p;
          return f * f;
        },
        [bk](int p) {
          const double f = 1.0 + bk * p;
          return f * f;
        },
        cfg, log_c1_sq);
  }
  return w;
}

double distortion_b(double y1, double B, int k, const SeriesConfig& cfg) {
  check_args(y1, B, k);
  if (k == 0) {
    // sqrt(G_0 / Z) = Z
    return std::sqrt(B / (1.0 + B)) * z_derivative(y1, 0, cfg);
  }
  const double pre = k / std::sqrt(B * (1.0 + B));
  if (k % 2 == 0) {
    // G_k / (y1 Z^{(k)}) with G_k / y1 finite at y1 = 0
    return pre * std::sqrt(g1_norm_over_y(y1, B, k, cfg) / z_derivative(y1, k, cfg));
  }
  if (y1 == 0.0) throw DomainError("b_k diverges at y1 = 0 for odd k");
  return pre * std::sqrt(g1_norm(y1, B, k, cfg) / (y1 * z_derivative(y1, k, cfg)));
}

double distortion_b_unbalanced(double b, const DVQubit& qubit) {
  if (qubit.a0 == 0.0) throw DegenerateQubitError("a0 = 0: distortion factor a1 b / a0 is undefined");
  return qubit.a1 * b / qubit.a0;
}

double success_probability(const SqueezingSpec& sq, const BeamSplitterSpec& bs, int k, ProbabilityMode mode,
                           const SeriesConfig& cfg) {
  const double y1 = ReducedSqueezing::from(sq, bs).y1;
  const BranchWeights w = branch_weights(y1, bs.B(), k, cfg);
  const double inv_cosh = 1.0 / std::cosh(sq.s());
  switch (mode) {
    case ProbabilityMode::kBalanced:
      // c0^2 Z (1 + b^2) / 2
      return 0.5 * (w.subtract + w.add_subtract) * inv_cosh;
    case ProbabilityMode::kUnbalancedGate: {
      // c0^2 Z 2 b^2 / (1 + b^2), b^2 = add_subtract / subtract
      const double total = w.subtract + w.add_subtract;
      if (total == 0.0) return 0.0;
      return 2.0 * w.subtract * w.add_subtract / total * inv_cosh;
    }
  }
  throw DomainError("unknown probability mode");
}

double success_probability(const SqueezingSpec& sq, const BeamSplitterSpec& bs, const DVQubit& qubit, int k,
                           const SeriesConfig& cfg) {
  const double y1 = ReducedSqueezing::from(sq, bs).y1;
  const BranchWeights w = branch_weights(y1, bs.B(), k, cfg);
  return (qubit.a0 * qubit.a0 * w.subtract + qubit.a1 * qubit.a1 * w.add_subtract) / std::cosh(sq.s());
}

const FockVector& HybridState::even_branch() const {
  return subtract_branch.parity() == Parity::kEven ? subtract_branch : add_subtract_branch;
}

const FockVector& HybridState::odd_branch() const {
  return subtract_branch.parity() == Parity::kOdd ? subtract_branch : add_subtract_branch;
}

Eigen::Vector4d HybridState::qubit_vector() const {
  Eigen::Vector4d v = Eigen::Vector4d::Zero();
  const int sub_cv = subtract_branch.parity() == Parity::kEven ? 0 : 1;
  const int add_cv = 1 - sub_cv;
  const double inv = 1.0 / std::sqrt(norm());
  v[2 * sub_cv + subtract_photon()] = inv;
  v[2 * add_cv + add_subtract_photon()] = phase * b * inv;
  return v;
}

Matrix HybridState::joint_amplitudes() const {
  const int n = std::max(subtract_branch.truncation(), add_subtract_branch.truncation());
  Matrix m = Matrix::Zero(n, 2);
  const double inv = 1.0 / std::sqrt(norm());
  m.col(subtract_photon()).head(subtract_branch.truncation()) = inv * subtract_branch.amplitudes();
  m.col(add_subtract_photon()).head(add_subtract_branch.truncation()) =
      (phase * b * inv) * add_subtract_branch.amplitudes();
  return m;
}

HybridState build_hybrid(const SqueezingSpec& sq, const BeamSplitterSpec& bs, const DVQubit& qubit, int k,
                         Truncation trunc, const SeriesConfig& cfg) {
  const ReducedSqueezing y1 = ReducedSqueezing::from(sq, bs);
  HybridState h;
  h.k = k;
  h.layout = qubit.form;
  h.b = distortion_b_unbalanced(distortion_b(y1.y1, bs.B(), k, cfg), qubit);
  h.subtract_branch = cv_state_subtract(y1, k, trunc, cfg);
  h.add_subtract_branch = cv_state_add_subtract(y1, bs.B(), k, trunc, cfg);
  return h;
}

double negativity(const HybridState& h) { return 2.0 * h.b / h.norm(); }

double hybrid_overlap(const HybridState& h1, const HybridState& h2) {
  const Matrix a = h1.joint_amplitudes();
  const Matrix c = h2.joint_amplitudes();
  const Eigen::Index n = std::min(a.rows(), c.rows());
  return (a.topRows(n).array() * c.topRows(n).array()).sum();
}

}  // namespace bscz
