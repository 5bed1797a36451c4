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

#include "bscz/numerics.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "bscz/error.hpp"

namespace bscz {

namespace {

constexpr int kLogFactTableSize = 1 << 15;

const std::vector<long double>& log_fact_table() {
  static const std::vector<long double> table = [] {
    std::vector<long double> t(kLogFactTableSize);
    t[0] = 0.0L;
    for (int i = 1; i < kLogFactTableSize; ++i) t[i] = t[i - 1] + std::log(static_cast<long double>(i));
    return t;
  }();
  return table;
}

}  // namespace

namespace detail {

long double log_factorial_ld(int n) {
  if (n < kLogFactTableSize) return log_fact_table()[n];
  return std::lgamma(static_cast<long double>(n) + 1.0L);
}

}  // namespace detail

namespace {

using detail::log_factorial_ld;

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

void check_y(double y) {
  if (!(y >= 0.0 && y < 0.5)) {
    std::ostringstream os;
    os << "squeezing parameter y1 = " << y << " outside [0, 1/2)";
    throw DomainError(os.str());
  }
}

}  // namespace

void SeriesConfig::validate() const {
  if (max_terms < 1) throw DomainError("SeriesConfig.max_terms must be >= 1");
  if (!(tail_tolerance > 0.0)) throw DomainError("SeriesConfig.tail_tolerance must be > 0");
}

double log_factorial(int n) {
  if (n < 0) throw DomainError("log_factorial of a negative integer");
  return static_cast<double>(log_factorial_ld(n));
}

double log_binomial(int n, int k) {
  if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
  return static_cast<double>(log_factorial_ld(n) - log_factorial_ld(k) - log_factorial_ld(n - k));
}

namespace detail {

double z_series(double y, int k, int shift, const std::function<double(int)>& weight,
                const std::function<double(int)>& envelope, const SeriesConfig& cfg, double log_scale) {
  cfg.validate();
  check_y(y);
  if (k < 0) throw DomainError("derivative order must be nonnegative");

  const int first_n = (k + 1) / 2;
  const int first_p = 2 * first_n - k;
  if (first_p < shift) throw DomainError("series shift exceeds the lowest monomial power");

  auto log_coeff = [k](int n) -> long double {
    return 2.0L * log_factorial_ld(2 * n) - 2.0L * log_factorial_ld(n) - log_factorial_ld(2 * n - k);
  };

  if (y == 0.0) {
    if (first_p != shift) return 0.0;
    return static_cast<double>(std::exp(log_coeff(first_n) + log_scale)) * weight(first_p);
  }

  const long double log_y = std::log(static_cast<long double>(y));
  const double unit = std::exp(log_scale);
  const double four_y2 = 4.0 * y * y;

  CompensatedSum sum;
  for (int i = 0; i < cfg.max_terms; ++i) {
    const int n = first_n + i;
    const int p = 2 * n - k;
    const long double log_mono = log_coeff(n) + static_cast<long double>(p - shift) * log_y + log_scale;
    const double w = weight(p);
    if (w != 0.0) sum.add(w * static_cast<double>(std::exp(log_mono)));

    const double env = envelope(p);
    if (env <= 0.0) continue;
    // Unweighted ratio coeff(n+1)/coeff(n) * y^2 is nonincreasing for k >= 1
    // and bounded by 4y^2 for k = 0.
    const double two_n1 = 2.0 * n + 1.0;
    const double unweighted = 4.0 * two_n1 * two_n1 / ((2.0 * n + 2.0 - k) * (2.0 * n + 1.0 - k)) * y * y;
    const double rho = std::max(unweighted, four_y2) * (envelope(p + 2) / env);
    if (rho >= 1.0) continue;
    const double env_term = env * static_cast<double>(std::exp(log_mono));
    const double tail = env_term * rho / (1.0 - rho);
    if (tail <= cfg.tail_tolerance * std::max(unit, std::abs(sum.value()))) return sum.value();
  }
  std::ostringstream os;
  os << "series for Z^(" << k << ") at y1 = " << y << " not certified within " << cfg.max_terms
     << " terms; raise max_terms";
  throw ConvergenceError(os.str());
}

}  // namespace detail

double z_derivative(double y1, int k, const SeriesConfig& cfg) {
  const auto one = [](int) { return 1.0; };
  return detail::z_series(y1, k, 0, one, one, cfg);
}

double g1_norm(double y1, double B, int k, const SeriesConfig& cfg) {
  if (!(B > 0.0)) throw DomainError("beam-splitter parameter B must be positive");
  if (k < 0) throw DomainError("photon count k must be nonnegative");
  if (k == 0) {
    const double z = z_derivative(y1, 0, cfg);
    return z * z * z;
  }
  const double bk = B / k;
  return detail::z_series(
      y1, k - 1, 0,
      [bk](int p) {
        const double f = 1.0 - bk * p;
        return f * f;
      },
      [bk](int p) {
        const double f = 1.0 + bk * p;
        return f * f;
      },
      cfg);
}

double g1_norm_over_y(double y1, double B, int k, const SeriesConfig& cfg) {
  if (!(B > 0.0)) throw DomainError("beam-splitter parameter B must be positive");
  if (k < 2 || k % 2 != 0) throw DomainError("g1_norm_over_y is defined for even k >= 2");
  const double bk = B / k;
  return detail::z_series(
      y1, k - 1, 1,
      [bk](int p) {
        const double f = 1.0 - bk * p;
        return f * f;
      },
      [bk](int p) {
        const double f = 1.0 + bk * p;
        return f * f;
      },
      cfg);
}

double g1_norm_log_derivative(double y1, double B, int k, const SeriesConfig& cfg) {
  if (!(B > 0.0)) throw DomainError("beam-splitter parameter B must be positive");
  if (k < 0) throw DomainError("photon count k must be nonnegative");
  if (k == 0) {
    // G_0 = sum_p (p + 1) c_p y^p
    const auto w = [](int p) { return static_cast<double>(p) * (p + 1); };
    return detail::z_series(y1, 0, 0, w, w, cfg);
  }
  const double bk = B / k;
  return detail::z_series(
      y1, k - 1, 0,
      [bk](int p) {
        const double f = 1.0 - bk * p;
        return p * f * f;
      },
      [bk](int p) {
        const double f = 1.0 + bk * p;
        return p * f * f;
      },
      cfg);
}

}  // namespace bscz
