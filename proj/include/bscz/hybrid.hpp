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

#ifndef BSCZ_HYBRID_HPP_
#define BSCZ_HYBRID_HPP_

#include <Eigen/Dense>

#include "bscz/numerics.hpp"
#include "bscz/states.hpp"
#include "bscz/types.hpp"

namespace bscz {

/// c_k^{(0)}(y1, B) = (-1)^k (y1 B)^{k/2} / sqrt(k!)
double amplitude_c0(double y1, double B, int k);

/// c_k^{(1)}(y1, B) = sqrt(B / (1 + B)) for k = 0, otherwise
/// (-1)^{k+1} (y1 B)^{(k-1)/2} k / sqrt(k!) / sqrt(1 + B).
double amplitude_c1(double y1, double B, int k);

/// Squared branch weights of outcome k before the 1/cosh(s) prefactor:
/// `subtract` = c0^2 Z^{(k)}, `add_subtract` = c1^2 G_k^{(1)}.
struct BranchWeights {
  double subtract = 0.0;
  double add_subtract = 0.0;
};

BranchWeights branch_weights(double y1, double B, int k, const SeriesConfig& cfg = {});

/// Distortion factor b_k(y1, B) > 0 of the balanced scheme,
/// |c1 / c0| sqrt(G_k^{(1)} / Z^{(k)}). Finite at y1 = 0 only for even k.
double distortion_b(double y1, double B, int k, const SeriesConfig& cfg = {});

/// b' = a1 b / a0 for an unbalanced DV qubit.
double distortion_b_unbalanced(double b, const DVQubit& qubit);

enum class ProbabilityMode {
  /// a0 = a1: factor N_k / 2
  kBalanced,
  /// qubit tuned so that b' = 1: factor 2 b_k^2 / (1 + b_k^2)
  kUnbalancedGate,
};

double success_probability(const SqueezingSpec& sq, const BeamSplitterSpec& bs, int k, ProbabilityMode mode,
                           const SeriesConfig& cfg = {});

/// General qubit: a0^2 c0^2 Z^{(k)} N'_k / cosh s.
double success_probability(const SqueezingSpec& sq, const BeamSplitterSpec& bs, const DVQubit& qubit, int k,
                           const SeriesConfig& cfg = {});

/// Heralded CV-photon state for outcome k.
///
///   xi:   (b |Psi^{(1)}>|0> + |Psi^{(0)}>|1>) / sqrt(N)
///   zeta: (|Psi^{(0)}>|0> + b |Psi^{(1)}>|1>) / sqrt(N)
///
/// with N = 1 + b^2 and b the (unbalanced) distortion factor. The branch
/// amplitudes keep the signs of their closed-form expansions. `phase`
/// multiplies the b-branch: +1 is the presentation above, reached from the
/// raw beam-splitter output by a pi phase shift on the photonic mode when
/// k != 0. Mixtures heralded by a different count use -1 for components
/// whose raw relative sign differs from the herald's.
struct HybridState {
  int k = 0;
  double b = 1.0;
  int phase = 1;
  QubitForm layout = QubitForm::kXi;
  FockVector subtract_branch;      // |Psi_k^{(0)}>
  FockVector add_subtract_branch;  // |Psi_k^{(1)}>

  double norm() const { return 1.0 + b * b; }
  const FockVector& even_branch() const;
  const FockVector& odd_branch() const;

  /// Photonic value (0 or 1) carried alongside each CV branch.
  int subtract_photon() const { return layout == QubitForm::kXi ? 1 : 0; }
  int add_subtract_photon() const { return 1 - subtract_photon(); }

  /// Coordinates in (|+_CV>|0>, |+_CV>|1>, |-_CV>|0>, |-_CV>|1>) with
  /// |+_CV> the even branch and |-_CV> the odd branch.
  Eigen::Vector4d qubit_vector() const;

  /// Fock expansion: row n1, column = photonic value.
  Matrix joint_amplitudes() const;
};

HybridState build_hybrid(const SqueezingSpec& sq, const BeamSplitterSpec& bs, const DVQubit& qubit, int k,
                         Truncation trunc = {}, const SeriesConfig& cfg = {});

/// 2b / (1 + b^2)
double negativity(const HybridState& h);

/// <h1|h2> from branch-wise Fock overlaps.
double hybrid_overlap(const HybridState& h1, const HybridState& h2);

}  // namespace bscz

#endif  // BSCZ_HYBRID_HPP_
