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

#include "bscz/states.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "bscz/error.hpp"

namespace bscz {

namespace {

// y^n with y^0 = 1 also at y = 0, in the log domain.
double log_power(double y, int n) { return n == 0 ? 0.0 : n * std::log(y); }

void check_k(int k) {
  if (k < 0) throw DomainError("photon count k must be nonnegative");
}

// Fills every other Fock level starting at `offset` from `amplitude(n)`
// (level 2n + offset) and applies the truncation rule.
FockVector build_state(Parity parity, const std::function<double(int)>& amplitude, Truncation trunc,
                       std::string_view what) {
  const int offset = parity == Parity::kOdd ? 1 : 0;
  if (trunc.levels < 0) throw DomainError("truncation must be nonnegative");
  const bool automatic = trunc.levels == 0;
  const int cap = automatic ? kMaxAutoTruncation : trunc.levels;

  Vector amps = Vector::Zero(cap);
  double kept = 0.0;
  int used = cap;
  for (int n = 0;; ++n) {
    const int level = 2 * n + offset;
    if (level >= cap) break;
    const double a = amplitude(n);
    amps[level] = a;
    kept += a * a;
    if (automatic && 1.0 - kept < kStateTailTolerance) {
      used = level + 1;
      break;
    }
  }
  const double tail = 1.0 - kept;
  if ((automatic || trunc.enforce_tail) && tail >= kStateTailTolerance) {
    std::ostringstream os;
    os << what << ": truncation at " << cap << " levels discards squared norm " << tail
       << " (limit " << kStateTailTolerance << ")";
    throw TruncationError(os.str());
  }
  return FockVector(amps.head(used), parity);
}

}  // namespace

FockVector smsv_state(const SqueezingSpec& sq, Truncation trunc) {
  const double y = sq.y();
  const double log_norm = -0.5 * std::log(std::cosh(sq.s()));
  // c_{2n} = y^n sqrt((2n)!) / n! / sqrt(cosh s)
  return build_state(
      Parity::kEven,
      [&](int n) { return std::exp(log_power(y, n) + 0.5 * log_factorial(2 * n) - log_factorial(n) + log_norm); },
      trunc, "smsv_state");
}

FockVector cv_state_subtract(ReducedSqueezing r, int k, Truncation trunc, const SeriesConfig& cfg) {
  check_k(k);
  const double y1 = r.y1;
  const int m = k / 2;
  const auto one = [](int) { return 1.0; };
  if (k % 2 == 0) {
    const double log_norm = -0.5 * std::log(z_derivative(y1, k, cfg));
    return build_state(
        Parity::kEven,
        [&](int n) {
          return std::exp(log_power(y1, n) - 0.5 * log_factorial(2 * n) + log_factorial(2 * (n + m)) -
                          log_factorial(n + m) + log_norm);
        },
        trunc, "cv_state_subtract");
  }
  // sqrt(y1 / Z^{(k)}) = 1 / sqrt(Z^{(k)} / y1), finite at y1 = 0
  const double log_norm = -0.5 * std::log(detail::z_series(y1, k, 1, one, one, cfg));
  return build_state(
      Parity::kOdd,
      [&](int n) {
        return std::exp(log_power(y1, n) - 0.5 * log_factorial(2 * n + 1) + log_factorial(2 * (n + m + 1)) -
                        log_factorial(n + m + 1) + log_norm);
      },
      trunc, "cv_state_subtract");
}

FockVector cv_state_add_subtract(ReducedSqueezing r, double B, int k, Truncation trunc, const SeriesConfig& cfg) {
  check_k(k);
  if (!(B > 0.0)) throw DomainError("beam-splitter parameter B must be positive");
  const double y1 = r.y1;
  const int m = k / 2;
  if (k == 0) {
    const double log_norm = -0.5 * std::log(g1_norm(y1, B, 0, cfg));
    return build_state(
        Parity::kOdd,
        [&](int n) {
          return std::exp(log_power(y1, n) - 0.5 * log_factorial(2 * n + 1) + log_factorial(2 * n) -
                          log_factorial(n) + std::log(2.0 * n + 1.0) + log_norm);
        },
        trunc, "cv_state_add_subtract");
  }
  if (k % 2 == 0) {
    // sqrt(y1 / G) = 1 / sqrt(G / y1)
    const double log_norm = -0.5 * std::log(g1_norm_over_y(y1, B, k, cfg));
    return build_state(
        Parity::kOdd,
        [&](int n) {
          const double factor = 1.0 - (2.0 * n + 1.0) * B / (2.0 * m);
          return factor * std::exp(log_power(y1, n) - 0.5 * log_factorial(2 * n + 1) +
                                   log_factorial(2 * (n + m)) - log_factorial(n + m) + log_norm);
        },
        trunc, "cv_state_add_subtract");
  }
  const double log_norm = -0.5 * std::log(g1_norm(y1, B, k, cfg));
  return build_state(
      Parity::kEven,
      [&](int n) {
        const double factor = 1.0 - 2.0 * n * B / (2.0 * m + 1.0);
        return factor * std::exp(log_power(y1, n) - 0.5 * log_factorial(2 * n) + log_factorial(2 * (n + m)) -
                                 log_factorial(n + m) + log_norm);
      },
      trunc, "cv_state_add_subtract");
}

Vector photon_distribution(const FockVector& state) { return state.amplitudes().array().square().matrix(); }

double mean_photon_number(const FockVector& state) {
  const Vector p = photon_distribution(state);
  double mean = 0.0;
  for (int n = 0; n < p.size(); ++n) mean += n * p[n];
  return mean;
}

double mean_photons_sub(ReducedSqueezing r, int k, const SeriesConfig& cfg) {
  check_k(k);
  if (k % 2 == 0) return r.y1 * z_derivative(r.y1, k + 1, cfg) / z_derivative(r.y1, k, cfg);
  // y1 Z^{(k+1)} / Z^{(k)} = Z^{(k+1)} / (Z^{(k)} / y1)
  const auto one = [](int) { return 1.0; };
  return z_derivative(r.y1, k + 1, cfg) / detail::z_series(r.y1, k, 1, one, one, cfg);
}

double mean_photons_add_subtract(ReducedSqueezing r, double B, int k, const SeriesConfig& cfg) {
  check_k(k);
  if (!(B > 0.0)) throw DomainError("beam-splitter parameter B must be positive");
  if (k == 0) {
    // The monomial y^p of G_0 belongs to Fock level p + 1.
    return 1.0 + g1_norm_log_derivative(r.y1, B, 0, cfg) / g1_norm(r.y1, B, 0, cfg);
  }
  // (y d/dy) G / G over the monomials of Z^{(k-1)}; divide both sums by y1
  // for even k so that the ratio stays finite at y1 = 0.
  const int shift = k % 2 == 0 ? 1 : 0;
  const double bk = B / k;
  auto weight = [bk](int p) {
    const double f = 1.0 - bk * p;
    return f * f;
  };
  auto envelope = [bk](int p) {
    const double f = 1.0 + bk * p;
    return f * f;
  };
  const double num = detail::z_series(
      r.y1, k - 1, shift, [&](int p) { return p * weight(p); }, [&](int p) { return p * envelope(p); }, cfg);
  const double den = detail::z_series(r.y1, k - 1, shift, weight, envelope, cfg);
  return num / den;
}

QuadratureVariance quadrature_variance(const FockVector& state) {
  const Vector& c = state.amplitudes();
  const int n_max = state.truncation();
  double mean_a = 0.0;   // <a>
  double mean_a2 = 0.0;  // <a^2>
  double mean_n = 0.0;   // <a^dag a>
  for (int n = 0; n < n_max; ++n) {
    mean_n += n * c[n] * c[n];
    if (n + 1 < n_max) mean_a += std::sqrt(n + 1.0) * c[n] * c[n + 1];
    if (n + 2 < n_max) mean_a2 += std::sqrt((n + 1.0) * (n + 2.0)) * c[n] * c[n + 2];
  }
  QuadratureVariance q;
  q.mean_x = mean_a;
  q.var_x = (2.0 * mean_a2 + 2.0 * mean_n + 1.0) / 4.0 - mean_a * mean_a;
  q.var_p = (-2.0 * mean_a2 + 2.0 * mean_n + 1.0) / 4.0;
  return q;
}

}  // namespace bscz
