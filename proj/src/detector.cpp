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

#include "bscz/detector.hpp"

#include <cmath>

#include "bscz/error.hpp"

namespace bscz {

void DetectorSpec::validate() const {
  if (!(eta > 0.0 && eta <= 1.0)) throw DomainError("detector efficiency must lie in (0, 1]");
  if (!(low_eta_threshold >= 0.0 && low_eta_threshold <= 1.0))
    throw DomainError("low-efficiency threshold must lie in [0, 1]");
}

Vector povm_element(int k, const DetectorSpec& det, int truncation) {
  det.validate();
  if (k < 0) throw DomainError("photon count k must be nonnegative");
  if (truncation < 1) throw DomainError("truncation must be positive");
  Vector d = Vector::Zero(truncation);
  const double log_eta = std::log(det.eta);
  for (int n = k; n < truncation; ++n) {
    if (n == k) {
      d[n] = std::pow(det.eta, k);
    } else if (det.eta < 1.0) {
      d[n] = std::exp(k * log_eta + log_binomial(n, k) + (n - k) * std::log1p(-det.eta));
    }
  }
  return d;
}

namespace {

double mean_sub(const SqueezingSpec& sq, const BeamSplitterSpec& bs, int k, const SeriesConfig& cfg) {
  return mean_photons_sub(ReducedSqueezing::from(sq, bs), k, cfg);
}

double norm_prime(const SqueezingSpec& sq, const BeamSplitterSpec& bs, const DVQubit& qubit, int k,
                  const SeriesConfig& cfg) {
  const double y1 = ReducedSqueezing::from(sq, bs).y1;
  const double b = distortion_b_unbalanced(distortion_b(y1, bs.B(), k, cfg), qubit);
  return 1.0 + b * b;
}

}  // namespace

std::vector<double> mixture_ratios(const SqueezingSpec& sq, const BeamSplitterSpec& bs, const DVQubit& qubit, int k,
                                   const DetectorSpec& det, const SeriesConfig& cfg) {
  det.validate();
  if (det.eta == 1.0) return {1.0, 0.0, 0.0};
  const double loss = 1.0 - det.eta;
  const double B = bs.B();
  const double n0 = mean_sub(sq, bs, k, cfg);
  const double n1 = mean_sub(sq, bs, k + 1, cfg);
  const double nk = norm_prime(sq, bs, qubit, k, cfg);
  const double r1 = loss * B * n0 * norm_prime(sq, bs, qubit, k + 1, cfg) / nk;
  const double r2 = 0.5 * loss * loss * B * B * n0 * n1 * norm_prime(sq, bs, qubit, k + 2, cfg) / nk;
  return {1.0, r1, r2};
}

MixedHybridState mixed_output(const SqueezingSpec& sq, const BeamSplitterSpec& bs, const DVQubit& qubit, int k,
                              const DetectorSpec& det, Truncation trunc, const SeriesConfig& cfg) {
  const std::vector<double> r = mixture_ratios(sq, bs, qubit, k, det, cfg);
  MixedHybridState m;
  m.k = k;
  m.low_efficiency = det.low_efficiency();
  m.g = r[0] + r[1] + r[2];
  const int terms = det.eta == 1.0 ? 1 : 3;
  for (int j = 0; j < terms; ++j) {
    MixtureComponent c;
    c.state = build_hybrid(sq, bs, qubit, k + j, trunc, cfg);
    // A zero-count herald applies no phase correction; components with a
    // nonzero true count then keep their raw negative relative sign.
    if (k == 0 && j > 0) c.state.phase = -1;
    c.weight = r[j] / m.g;
    m.components.push_back(std::move(c));
  }
  return m;
}

double fidelity(const SqueezingSpec& sq, const BeamSplitterSpec& bs, const DVQubit& qubit, int k,
                const DetectorSpec& det, Truncation trunc, const SeriesConfig& cfg) {
  det.validate();
  if (det.eta == 1.0) return 1.0;
  const MixedHybridState m = mixed_output(sq, bs, qubit, k, det, trunc, cfg);
  const double overlap = hybrid_overlap(m.components[2].state, m.components[0].state);
  return (1.0 + m.components[2].weight * m.g * overlap * overlap) / m.g;
}

double detected_probability(const SqueezingSpec& sq, const BeamSplitterSpec& bs, const DVQubit& qubit, int k,
                            const DetectorSpec& det, const SeriesConfig& cfg) {
  const std::vector<double> r = mixture_ratios(sq, bs, qubit, k, det, cfg);
  return std::pow(det.eta, k) * (r[0] + r[1] + r[2]) * success_probability(sq, bs, qubit, k, cfg);
}

double third_order_bound(const SqueezingSpec& sq, const BeamSplitterSpec& bs, int k, const DetectorSpec& det,
                         const SeriesConfig& cfg) {
  det.validate();
  const double loss = 1.0 - det.eta;
  const double B = bs.B();
  return 5.0 * loss * loss * loss * B * B * B * mean_sub(sq, bs, k, cfg) * mean_sub(sq, bs, k + 1, cfg) *
         mean_sub(sq, bs, k + 2, cfg);
}

}  // namespace bscz
