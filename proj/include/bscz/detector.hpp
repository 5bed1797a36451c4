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

#ifndef BSCZ_DETECTOR_HPP_
#define BSCZ_DETECTOR_HPP_

#include <vector>

#include "bscz/hybrid.hpp"

namespace bscz {

/// Photon-number-resolving detector with quantum efficiency eta.
struct DetectorSpec {
  double eta = 1.0;
  /// Below this efficiency the second-order mixture is flagged as unreliable.
  double low_eta_threshold = 0.3;

  void validate() const;
  bool low_efficiency() const { return eta < low_eta_threshold; }
};

/// Diagonal of the binomial-loss POVM element for outcome k:
/// Pi_k(n) = eta^k C(n, k) (1 - eta)^(n - k), n = 0 .. truncation - 1.
Vector povm_element(int k, const DetectorSpec& det, int truncation);

struct MixtureComponent {
  HybridState state;
  double weight = 0.0;
};

/// Second-order output after a click of k photons: true counts k, k + 1,
/// k + 2 with weights w_j = r_j / g.
struct MixedHybridState {
  int k = 0;
  std::vector<MixtureComponent> components;
  double g = 1.0;
  bool low_efficiency = false;
};

MixedHybridState mixed_output(const SqueezingSpec& sq, const BeamSplitterSpec& bs, const DVQubit& qubit, int k,
                              const DetectorSpec& det, Truncation trunc = {}, const SeriesConfig& cfg = {});

/// Unnormalized mixture weights (1, r_1, r_2); g is their sum.
std::vector<double> mixture_ratios(const SqueezingSpec& sq, const BeamSplitterSpec& bs, const DVQubit& qubit, int k,
                                   const DetectorSpec& det, const SeriesConfig& cfg = {});

/// (1 + r_2 |<Delta_{k+2}|Delta_k>|^2) / g
double fidelity(const SqueezingSpec& sq, const BeamSplitterSpec& bs, const DVQubit& qubit, int k,
                const DetectorSpec& det, Truncation trunc = {}, const SeriesConfig& cfg = {});

/// eta^k g P_k
double detected_probability(const SqueezingSpec& sq, const BeamSplitterSpec& bs, const DVQubit& qubit, int k,
                            const DetectorSpec& det, const SeriesConfig& cfg = {});

/// Bound on the neglected third-order weight relative to the herald:
/// 5 (1 - eta)^3 B^3 <n_k> <n_{k+1}> <n_{k+2}>, with <n> = <n^{(0)}>.
double third_order_bound(const SqueezingSpec& sq, const BeamSplitterSpec& bs, int k, const DetectorSpec& det,
                         const SeriesConfig& cfg = {});

}  // namespace bscz

#endif  // BSCZ_DETECTOR_HPP_
