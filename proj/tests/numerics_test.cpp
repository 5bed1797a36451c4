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

#include <gtest/gtest.h>

#include <cmath>

#include "bscz/error.hpp"
#include "bscz/numerics.hpp"

namespace bscz {
namespace {

double z_closed(double y) { return 1.0 / std::sqrt(1.0 - 4.0 * y * y); }

TEST(LogFactorial, MatchesLgamma) {
  for (int n : {0, 1, 2, 5, 20, 170, 1000, 10000, 40000}) {
    EXPECT_NEAR(log_factorial(n), std::lgamma(n + 1.0), 1e-12 * std::max(1.0, std::lgamma(n + 1.0))) << n;
  }
  EXPECT_EQ(log_factorial(0), 0.0);
  EXPECT_EQ(log_factorial(1), 0.0);
}

TEST(LogFactorial, SmallValuesExact) {
  double f = 1.0;
  for (int n = 1; n <= 20; ++n) {
    f *= n;
    EXPECT_NEAR(std::exp(log_factorial(n)) / f, 1.0, 1e-14);
  }
}

TEST(LogBinomial, Values) {
  EXPECT_NEAR(std::exp(log_binomial(10, 3)), 120.0, 1e-10);
  EXPECT_NEAR(std::exp(log_binomial(52, 5)), 2598960.0, 1e-6);
  EXPECT_TRUE(std::isinf(log_binomial(3, 4)));
  EXPECT_TRUE(std::isinf(log_binomial(3, -1)));
}

TEST(SeriesConfig, Validation) {
  EXPECT_NO_THROW(SeriesConfig{}.validate());
  EXPECT_THROW((SeriesConfig{0, 1e-14}).validate(), DomainError);
  EXPECT_THROW((SeriesConfig{10, 0.0}).validate(), DomainError);
}

TEST(ZDerivative, OrderZeroIsClosedForm) {
  for (double y : {0.0, 0.1, 0.3, 0.45, 0.49, 0.497}) {
    EXPECT_NEAR(z_derivative(y, 0) / z_closed(y), 1.0, 1e-12) << y;
  }
}

TEST(ZDerivative, LowOrdersClosedForm) {
  for (double y : {0.05, 0.2, 0.4, 0.48}) {
    const double u = 1.0 - 4.0 * y * y;
    EXPECT_NEAR(z_derivative(y, 1) / (4.0 * y * std::pow(u, -1.5)), 1.0, 1e-12);
    const double z2 = 4.0 * std::pow(u, -1.5) + 48.0 * y * y * std::pow(u, -2.5);
    EXPECT_NEAR(z_derivative(y, 2) / z2, 1.0, 1e-12);
  }
}

TEST(ZDerivative, ValueAtOrigin) {
  // k! [y^k] Z: k! C(k, k/2) for even k, 0 for odd k.
  EXPECT_EQ(z_derivative(0.0, 1), 0.0);
  EXPECT_EQ(z_derivative(0.0, 3), 0.0);
  EXPECT_NEAR(z_derivative(0.0, 2), 4.0, 1e-12);
  EXPECT_NEAR(z_derivative(0.0, 4), 24.0 * 6.0, 1e-9);
  EXPECT_NEAR(z_derivative(0.0, 6), 720.0 * 20.0, 1e-8);
}

TEST(ZDerivative, FiniteDifferenceOfPreviousOrder) {
  for (double y : {0.02, 0.1, 0.25, 0.35, 0.42}) {
    for (int k = 1; k <= 8; ++k) {
      const double h = 1e-5 * std::max(y, 0.01);
      const double fd = (z_derivative(y + h, k - 1) - z_derivative(y - h, k - 1)) / (2.0 * h);
      EXPECT_NEAR(fd / z_derivative(y, k), 1.0, 1e-6) << "y=" << y << " k=" << k;
    }
  }
}

TEST(ZDerivative, Errors) {
  EXPECT_THROW(z_derivative(0.5, 0), DomainError);
  EXPECT_THROW(z_derivative(-0.1, 0), DomainError);
  EXPECT_THROW(z_derivative(0.1, -1), DomainError);
  EXPECT_THROW(z_derivative(0.499, 2, SeriesConfig{20, 1e-14}), ConvergenceError);
}

TEST(ZDerivative, NearSingularity) {
  // y1 = 0.497 is the upper end of the default budget.
  const double y = 0.497;
  EXPECT_NEAR(z_derivative(y, 0) / z_closed(y), 1.0, 1e-11);
  const double u = 1.0 - 4.0 * y * y;
  EXPECT_NEAR(z_derivative(y, 1) / (4.0 * y * std::pow(u, -1.5)), 1.0, 1e-11);
}

double g1_from_derivatives(double y, double B, int k) {
  if (k == 0) return std::pow(z_derivative(y, 0), 3);
  const double bk = B / k;
  const double zk = z_derivative(y, k), zk1 = z_derivative(y, k + 1);
  return z_derivative(y, k - 1) - 2.0 * bk * y * zk + bk * bk * (y * zk + y * y * zk1);
}

TEST(G1Norm, OriginIsOne) {
  for (double B : {0.01, 1.0, 99.0}) EXPECT_NEAR(g1_norm(0.0, B, 0), 1.0, 1e-15);
}

TEST(G1Norm, MatchesDerivativeComposition) {
  for (double y : {0.01, 0.1, 0.3}) {
    for (double B : {0.05, 0.5, 3.0}) {
      for (int k = 0; k <= 6; ++k) {
        EXPECT_NEAR(g1_norm(y, B, k) / g1_from_derivatives(y, B, k), 1.0, 1e-9) << y << " " << B << " " << k;
      }
    }
  }
}

TEST(G1Norm, MatchesRawAmplitudeNorm) {
  // Squared norm of the unnormalized Fock coefficients, summed directly.
  for (double y : {0.05, 0.2, 0.4}) {
    for (double B : {0.1, 2.0, 50.0}) {
      for (int k = 0; k <= 5; ++k) {
        const int m = k / 2;
        long double sum = 0.0L;
        for (int n = 0; n < 2000; ++n) {
          long double lg, factor;
          if (k == 0) {
            lg = 2.0L * (n * std::log((long double)y) + log_factorial(2 * n) - log_factorial(n)) -
                 log_factorial(2 * n + 1);
            factor = 2.0L * n + 1.0L;
          } else if (k % 2 == 0) {
            lg = (2 * n + 1) * std::log((long double)y) +
                 2.0L * (log_factorial(2 * (n + m)) - log_factorial(n + m)) - log_factorial(2 * n + 1);
            factor = 1.0L - (2.0L * n + 1.0L) * B / (2.0L * m);
          } else {
            lg = 2 * n * std::log((long double)y) + 2.0L * (log_factorial(2 * (n + m)) - log_factorial(n + m)) -
                 log_factorial(2 * n);
            factor = 1.0L - 2.0L * n * B / (2.0L * m + 1.0L);
          }
          sum += factor * factor * std::exp(lg);
        }
        EXPECT_NEAR(g1_norm(y, B, k) / static_cast<double>(sum), 1.0, 1e-10) << y << " " << B << " " << k;
      }
    }
  }
}

TEST(G1Norm, OverYConsistent) {
  for (int k : {2, 4, 6}) {
    for (double y : {0.01, 0.2}) {
      EXPECT_NEAR(g1_norm_over_y(y, 3.0, k) * y / g1_norm(y, 3.0, k), 1.0, 1e-13);
    }
  }
  EXPECT_THROW(g1_norm_over_y(0.1, 1.0, 3), DomainError);
}

TEST(G1Norm, LogDerivativeMatchesFiniteDifference) {
  for (int k = 0; k <= 4; ++k) {
    for (double y : {0.05, 0.3}) {
      const double h = 1e-6;
      const double fd = y * (g1_norm(y + h, 1.5, k) - g1_norm(y - h, 1.5, k)) / (2.0 * h);
      EXPECT_NEAR(g1_norm_log_derivative(y, 1.5, k) / fd, 1.0, 1e-6) << k;
    }
  }
}

TEST(ZSeries, TailCertifiedAgainstLongSum) {
  const SeriesConfig loose{5000, 1e-6};
  const double y = 0.45;
  EXPECT_NEAR(z_derivative(y, 3, loose) / z_derivative(y, 3), 1.0, 2e-6);
}

}  // namespace
}  // namespace bscz
