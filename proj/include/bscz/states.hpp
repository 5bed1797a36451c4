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

#ifndef BSCZ_STATES_HPP_
#define BSCZ_STATES_HPP_

#include <string_view>

#include "bscz/numerics.hpp"
#include "bscz/types.hpp"

namespace bscz {

/// Squared-norm budget for the amplitudes cut off by a truncation.
inline constexpr double kStateTailTolerance = 1e-12;
/// Largest truncation the automatic rule may pick.
inline constexpr int kMaxAutoTruncation = 512;

/// How many Fock levels to keep when building a state.
///
/// `levels == 0` picks the smallest truncation whose discarded squared norm
/// is below kStateTailTolerance (at most kMaxAutoTruncation levels). With
/// `enforce_tail` a fixed truncation that discards more raises
/// TruncationError; oracle comparisons that only look at individual
/// amplitudes turn it off.
struct Truncation {
  int levels = 0;
  bool enforce_tail = true;

  static Truncation automatic() { return {}; }
  static Truncation fixed(int levels) { return {levels, true}; }
  static Truncation unchecked(int levels) { return {levels, false}; }
};

FockVector smsv_state(const SqueezingSpec& sq, Truncation trunc = {});

/// |Psi_k^{(0)}(y1)>: the reduced SMSV after k photons were reflected away.
/// Even k populates even levels, odd k odd levels.
FockVector cv_state_subtract(ReducedSqueezing y1, int k, Truncation trunc = {}, const SeriesConfig& cfg = {});

/// |Psi_k^{(1)}(y1, B)>: one photon added and k subtracted. Parity is
/// opposite to cv_state_subtract for the same k.
FockVector cv_state_add_subtract(ReducedSqueezing y1, double B, int k, Truncation trunc = {},
                                 const SeriesConfig& cfg = {});

/// p_n = |c_n|^2
Vector photon_distribution(const FockVector& state);

/// sum_n n |c_n|^2
double mean_photon_number(const FockVector& state);

/// <n_k^{(0)}> = y1 Z^{(k+1)} / Z^{(k)}
double mean_photons_sub(ReducedSqueezing y1, int k, const SeriesConfig& cfg = {});

/// <n_k^{(1)}>, the photon-number moment of cv_state_add_subtract.
double mean_photons_add_subtract(ReducedSqueezing y1, double B, int k, const SeriesConfig& cfg = {});

/// Quadrature noise of a real-amplitude state, X = (a + a^dag) / 2 and
/// P = (a - a^dag) / 2i. For real amplitudes the X-P covariance vanishes,
/// so the most squeezed quadrature variance is min(var_x, var_p).
struct QuadratureVariance {
  static constexpr std::string_view kConvention = "X=(a+a^dag)/2, P=(a-a^dag)/(2i), vacuum variance 1/4";

  double mean_x = 0.0;
  double var_x = 0.0;
  double var_p = 0.0;

  double squeezed() const { return var_x < var_p ? var_x : var_p; }
};

QuadratureVariance quadrature_variance(const FockVector& state);

}  // namespace bscz

#endif  // BSCZ_STATES_HPP_
