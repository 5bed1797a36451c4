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

#ifndef BSCZ_NUMERICS_HPP_
#define BSCZ_NUMERICS_HPP_

#include <functional>

namespace bscz {

/// Truncation control shared by every generating-function series.
///
/// A series stops once the neglected tail is certified below
/// `tail_tolerance * max(1, |partial sum|)`; it fails with ConvergenceError
/// if that does not happen within `max_terms` terms.
struct SeriesConfig {
  int max_terms = 5000;
  double tail_tolerance = 1e-14;

  void validate() const;
};

/// ln(n!) from a long-double cumulative table (lgammal beyond it).
double log_factorial(int n);

/// ln C(n, k); -inf when k is outside [0, n].
double log_binomial(int n, int k);

/// k-th derivative of Z(y) = 1/sqrt(1 - 4 y^2) = sum_N C(2N,N) y^(2N).
///
/// Evaluated term by term from the power series. `y1` must lie in [0, 1/2).
double z_derivative(double y1, int k, const SeriesConfig& cfg = {});

/// Normalization G_k^{(1)}(y1, B) of the photon-added, k-photon-subtracted state.
///
/// k = 0 gives Z^3. For k >= 1 the three terms
///   Z^{(k-1)} - (2B/k) y1 Z^{(k)} + (B/k)^2 y1 d/dy1 (y1 Z^{(k)})
/// share the monomials of Z^{(k-1)}, and are summed term-wise as
/// sum_p c_p (1 - B p / k)^2 y1^p, which avoids cancelling large partial sums.
double g1_norm(double y1, double B, int k, const SeriesConfig& cfg = {});

/// G_k^{(1)}(y1, B) / y1 for even k >= 2, finite at y1 = 0.
double g1_norm_over_y(double y1, double B, int k, const SeriesConfig& cfg = {});

/// (y1 d/dy1) G_k^{(1)} at fixed B.
double g1_norm_log_derivative(double y1, double B, int k, const SeriesConfig& cfg = {});

namespace detail {

/// ln(n!) in extended precision, n >= 0.
long double log_factorial_ld(int n);

/// Sum over the monomials y^p of Z^{(k)} (p = 2N - k >= 0) of
///   coeff(N, k) * weight(p) * y^(p - shift),
/// coeff(N, k) = C(2N, N) (2N)! / (2N - k)!.
///
/// `weight` must be nonnegative. `envelope` bounds it from above and has a
/// nonincreasing ratio envelope(p + 2) / envelope(p); the tail estimate is
/// built from the envelope. Terms are formed in the log domain and summed
/// with Neumaier compensation. Every term is multiplied by exp(log_scale),
/// which keeps large prefactors out of the partial sums; the tail rule then
/// compares against max(exp(log_scale), |sum|).
double z_series(double y, int k, int shift, const std::function<double(int)>& weight,
                const std::function<double(int)>& envelope, const SeriesConfig& cfg, double log_scale = 0.0);

}  // namespace detail

}  // namespace bscz

#endif  // BSCZ_NUMERICS_HPP_
