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
#include "bscz/states.hpp"

namespace bscz {
namespace {

TEST(SqueezingSpec, Conversions) {
  const SqueezingSpec a = SqueezingSpec::from_db(10.0);
  EXPECT_NEAR(a.y(), 9.0 / 22.0, 1e-15);
  EXPECT_NEAR(a.s(), std::log(10.0) / 2.0, 1e-15);
  const SqueezingSpec b = SqueezingSpec::from_y(a.y());
  EXPECT_NEAR(b.s_db() / 10.0, 1.0, 1e-12);
  const SqueezingSpec c = SqueezingSpec::from_amplitude(0.7);
  EXPECT_NEAR(c.s_db(), -10.0 * std::log10(std::exp(-1.4)), 1e-12);
  EXPECT_NEAR(c.mean_photons(), std::pow(std::sinh(0.7), 2), 1e-15);
  EXPECT_THROW(SqueezingSpec::from_db(-1.0), DomainError);
  EXPECT_THROW(SqueezingSpec::from_y(0.5), DomainError);
}

TEST(BeamSplitterSpec, Parameters) {
  const BeamSplitterSpec bs = BeamSplitterSpec::from_B(3.0);
  EXPECT_NEAR(bs.t(), 0.5, 1e-15);
  EXPECT_NEAR(bs.t() * bs.t() + bs.r() * bs.r(), 1.0, 1e-15);
  const BeamSplitterSpec t = BeamSplitterSpec::from_transmittance(0.5);
  EXPECT_NEAR(t.B(), 3.0, 1e-12);
  EXPECT_EQ(bs.inverse().r(), -bs.r());
  EXPECT_THROW(BeamSplitterSpec::from_B(0.0), DomainError);
  EXPECT_THROW(BeamSplitterSpec::from_transmittance(1.0), DomainError);
}

TEST(ReducedSqueezing, Bounds) {
  const SqueezingSpec sq = SqueezingSpec::from_db(12.0);
  for (double B : {0.01, 1.0, 100.0}) {
    const double y1 = ReducedSqueezing::from(sq, BeamSplitterSpec::from_B(B)).y1;
    EXPECT_LE(y1, sq.y());
    EXPECT_NEAR(y1, sq.y() / (1.0 + B), 1e-16);
  }
}

TEST(FockVector, ParityValidated) {
  Vector v(3);
  v << 1.0, 0.5, 0.0;
  EXPECT_THROW(FockVector(v, Parity::kEven), DomainError);
  EXPECT_NO_THROW(FockVector(v, Parity::kIndefinite));
  const FockVector f(v, Parity::kIndefinite);
  EXPECT_EQ(f[10], 0.0);
}

TEST(Smsv, PhotonDistribution) {
  const SqueezingSpec sq = SqueezingSpec::from_db(6.0);
  const FockVector s = smsv_state(sq);
  EXPECT_NEAR(s.squared_norm(), 1.0, 1e-12);
  EXPECT_EQ(s.parity(), Parity::kEven);
  const Vector p = photon_distribution(s);
  for (int n = 0; n < 10; ++n) {
    const double expected = std::exp(log_binomial(2 * n, n) + 2 * n * std::log(sq.y())) / std::cosh(sq.s());
    EXPECT_NEAR(p[2 * n], expected, 1e-14);
    EXPECT_EQ(p[2 * n + 1], 0.0);
  }
  EXPECT_NEAR(mean_photon_number(s), sq.mean_photons(), 1e-10);
}

TEST(Smsv, QuadratureSqueezedInP) {
  const SqueezingSpec sq = SqueezingSpec::from_db(5.0);
  const QuadratureVariance q = quadrature_variance(smsv_state(sq));
  EXPECT_NEAR(q.var_p, std::exp(-2.0 * sq.s()) / 4.0, 1e-10);
  EXPECT_NEAR(q.var_x, std::exp(2.0 * sq.s()) / 4.0, 1e-10);
  EXPECT_NEAR(q.squeezed(), q.var_p, 0.0);
  const QuadratureVariance vac = quadrature_variance(smsv_state(SqueezingSpec::from_db(0.0)));
  EXPECT_NEAR(vac.var_x, 0.25, 1e-15);
  EXPECT_NEAR(vac.var_p, 0.25, 1e-15);
}

TEST(Truncation, FixedTooSmallThrows) {
  const SqueezingSpec sq = SqueezingSpec::from_db(10.0);
  EXPECT_THROW(smsv_state(sq, Truncation::fixed(10)), TruncationError);
  EXPECT_NO_THROW(smsv_state(sq, Truncation::unchecked(10)));
  EXPECT_EQ(smsv_state(sq, Truncation::unchecked(10)).truncation(), 10);
}

TEST(Truncation, AutomaticKeepsTailSmall) {
  const FockVector s = smsv_state(SqueezingSpec::from_db(12.0));
  EXPECT_LE(s.truncation(), kMaxAutoTruncation);
  EXPECT_GT(s.squared_norm(), 1.0 - kStateTailTolerance);
}

struct Point {
  double y1, B;
};
const Point kPoints[] = {{0.01, 0.1}, {0.2, 0.5}, {0.35, 3.0}, {0.45, 0.05}, {0.05, 80.0}};

TEST(CvStates, NormalizedWithParity) {
  for (const Point& p : kPoints) {
    for (int k = 0; k <= 7; ++k) {
      const FockVector sub = cv_state_subtract({p.y1}, k);
      const FockVector add = cv_state_add_subtract({p.y1}, p.B, k);
      EXPECT_NEAR(sub.squared_norm(), 1.0, 1e-12) << k;
      EXPECT_NEAR(add.squared_norm(), 1.0, 1e-12) << k;
      EXPECT_EQ(sub.parity(), k % 2 == 0 ? Parity::kEven : Parity::kOdd);
      EXPECT_EQ(add.parity(), k % 2 == 0 ? Parity::kOdd : Parity::kEven);
      EXPECT_EQ(inner_product(sub, add), 0.0);
    }
  }
}

TEST(CvStates, SubtractFromSmsvAmplitudes) {
  // Psi_k^{(0)} is proportional to a^k acting on the SMSV with y1.
  const double y1 = 0.3;
  const FockVector smsv = smsv_state(SqueezingSpec::from_y(y1), Truncation::unchecked(400));
  for (int k = 0; k <= 5; ++k) {
    const FockVector sub = cv_state_subtract({y1}, k);
    Vector v = Vector::Zero(smsv.truncation());
    for (int n = k; n < smsv.truncation(); ++n) {
      v[n - k] = smsv[n] * std::exp(0.5 * (log_factorial(n) - log_factorial(n - k)));
    }
    v.normalize();
    for (int n = 0; n < 20; ++n) EXPECT_NEAR(sub[n], v[n], 1e-12) << k << " " << n;
  }
}

TEST(CvStates, SignChangesKept) {
  // (1 - (2n+1) B / 2) changes sign between n = 0 and n = 1 for B = 1.
  const FockVector add = cv_state_add_subtract({0.3}, 1.0, 2);
  EXPECT_GT(add[1], 0.0);
  EXPECT_LT(add[3], 0.0);
  EXPECT_EQ(add[0], 0.0);
}

TEST(CvStates, LimitsAtZeroSqueezing) {
  EXPECT_NEAR(cv_state_add_subtract({0.0}, 2.0, 0)[1], 1.0, 1e-15);
  EXPECT_NEAR(cv_state_subtract({0.0}, 0)[0], 1.0, 1e-15);
  EXPECT_NEAR(std::abs(cv_state_subtract({0.0}, 3)[1]), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(cv_state_add_subtract({0.0}, 2.0, 4)[1]), 1.0, 1e-15);
}

TEST(MeanPhotons, MatchBruteForce) {
  for (const Point& p : kPoints) {
    for (int k = 0; k <= 6; ++k) {
      const double brute_sub = mean_photon_number(cv_state_subtract({p.y1}, k, Truncation::unchecked(600)));
      const double brute_add = mean_photon_number(cv_state_add_subtract({p.y1}, p.B, k, Truncation::unchecked(600)));
      EXPECT_NEAR(mean_photons_sub({p.y1}, k), brute_sub, 1e-10 * std::max(1.0, brute_sub)) << k;
      EXPECT_NEAR(mean_photons_add_subtract({p.y1}, p.B, k), brute_add, 1e-10 * std::max(1.0, brute_add)) << k;
    }
  }
}

TEST(MeanPhotons, ValuesAtOrigin) {
  EXPECT_EQ(mean_photons_sub({0.0}, 0), 0.0);
  EXPECT_EQ(mean_photons_sub({0.0}, 2), 0.0);
  EXPECT_NEAR(mean_photons_sub({0.0}, 1), 1.0, 1e-15);
  EXPECT_NEAR(mean_photons_add_subtract({0.0}, 5.0, 0), 1.0, 1e-15);
}

TEST(MeanPhotons, IncreaseWithSqueezing) {
  for (int k = 0; k <= 5; ++k) {
    double prev_sub = -1.0, prev_add = -1.0;
    for (double y1 = 0.0; y1 < 0.49; y1 += 0.02) {
      const double sub = mean_photons_sub({y1}, k);
      const double add = mean_photons_add_subtract({y1}, 0.7, k);
      EXPECT_GT(sub, prev_sub) << k << " " << y1;
      EXPECT_GT(add, prev_add) << k << " " << y1;
      prev_sub = sub;
      prev_add = add;
    }
  }
}

// B minimizing the squeezed quadrature variance of a state family at fixed S.
template <class F>
double best_b(double s_db, F make) {
  const SqueezingSpec sq = SqueezingSpec::from_db(s_db);
  double best = 0.0, best_var = 1e300;
  for (int i = 0; i <= 400; ++i) {
    const double B = std::pow(10.0, -2.0 + 4.0 * i / 400.0);
    const double v = quadrature_variance(make(ReducedSqueezing::from(sq, BeamSplitterSpec::from_B(B)), B)).squeezed();
    if (v < best_var) {
      best_var = v;
      best = B;
    }
  }
  return best;
}

TEST(Distributions, SubtractedStateHasLessVacuum) {
  const SqueezingSpec sq = SqueezingSpec::from_db(8.0);
  const double B = best_b(8.0, [](ReducedSqueezing r, double) { return cv_state_subtract(r, 2); });
  const FockVector sub = cv_state_subtract(ReducedSqueezing::from(sq, BeamSplitterSpec::from_B(B)), 2);
  EXPECT_LT(photon_distribution(sub)[0], photon_distribution(smsv_state(sq))[0]);
}

TEST(Distributions, AddSubtractPeaksAtOnePhoton) {
  const SqueezingSpec sq = SqueezingSpec::from_db(8.0);
  const double B = best_b(8.0, [](ReducedSqueezing r, double b) { return cv_state_add_subtract(r, b, 2); });
  const FockVector add = cv_state_add_subtract(ReducedSqueezing::from(sq, BeamSplitterSpec::from_B(B)), B, 2);
  const Vector p = photon_distribution(add);
  Eigen::Index arg;
  p.maxCoeff(&arg);
  EXPECT_EQ(arg, 1);
  EXPECT_EQ(p[0], 0.0);
}

}  // namespace
}  // namespace bscz
