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
#include "bscz/hybrid.hpp"

namespace bscz {
namespace {

TEST(Amplitudes, C0) {
  const double y1 = 0.13, B = 2.5;
  EXPECT_EQ(amplitude_c0(y1, B, 0), 1.0);
  EXPECT_NEAR(amplitude_c0(y1, B, 1), -std::sqrt(y1 * B), 1e-15);
  EXPECT_NEAR(amplitude_c0(y1, B, 2), y1 * B / std::sqrt(2.0), 1e-15);
}

TEST(Amplitudes, C1) {
  const double y1 = 0.13, B = 2.5;
  EXPECT_NEAR(amplitude_c1(y1, B, 0), std::sqrt(B / (1.0 + B)), 1e-15);
  EXPECT_NEAR(amplitude_c1(y1, B, 1), 1.0 / std::sqrt(1.0 + B), 1e-15);
  EXPECT_NEAR(amplitude_c1(y1, B, 2), -(std::sqrt(y1 * B) * 2.0 / std::sqrt(2.0)) / std::sqrt(1.0 + B), 1e-15);
  EXPECT_NEAR(amplitude_c1(0.0, B, 1), 1.0 / std::sqrt(1.0 + B), 1e-15);
}

TEST(Distortion, MatchesRatioDefinition) {
  for (double y1 : {0.01, 0.2, 0.4}) {
    for (double B : {0.05, 1.0, 40.0}) {
      for (int k = 0; k <= 6; ++k) {
        const double ratio = amplitude_c1(y1, B, k) / amplitude_c0(y1, B, k);
        const double expected = std::abs(ratio) * std::sqrt(g1_norm(y1, B, k) / z_derivative(y1, k));
        EXPECT_NEAR(distortion_b(y1, B, k) / expected, 1.0, 1e-12) << y1 << " " << B << " " << k;
      }
    }
  }
}

TEST(Distortion, PositiveEverywhere) {
  for (double y1 = 0.001; y1 < 0.5; y1 += 0.05)
    for (double B : {0.01, 0.3, 7.0, 1e3})
      for (int k = 0; k <= 6; ++k) EXPECT_GT(distortion_b(y1, B, k), 0.0);
}

TEST(Distortion, LimitsAtZeroSqueezing) {
  EXPECT_NEAR(distortion_b(0.0, 99.0, 0), std::sqrt(0.99), 1e-15);
  EXPECT_NEAR(distortion_b(1e-9, 99.0, 0), 0.995, 1e-3);
  // b_2(0, B) = 2 |1 - B/2| / sqrt(B (1 + B))
  EXPECT_NEAR(distortion_b(0.0, 3.0, 2), 2.0 * 0.5 / std::sqrt(12.0), 1e-14);
  EXPECT_THROW(distortion_b(0.0, 3.0, 1), DomainError);
}

TEST(Distortion, Unbalanced) {
  EXPECT_NEAR(distortion_b_unbalanced(0.8, DVQubit::from_ratio(2.0)), 1.6, 1e-15);
  EXPECT_NEAR(distortion_b_unbalanced(0.8, DVQubit::for_unit_distortion(0.8)), 1.0, 1e-15);
  EXPECT_THROW(distortion_b_unbalanced(0.8, DVQubit{0.0, 1.0}), DegenerateQubitError);
}

TEST(Distortion, BalancedOperatingPointNearUnity) {
  const SqueezingSpec sq = SqueezingSpec::from_db(9.99995);
  const BeamSplitterSpec bs = BeamSplitterSpec::from_B(8380.3);
  const double y1 = ReducedSqueezing::from(sq, bs).y1;
  EXPECT_NEAR(distortion_b(y1, bs.B(), 2), 0.999702, 2e-6);
  EXPECT_NEAR(distortion_b(y1, bs.B(), 4), 0.999463, 2e-6);
  EXPECT_NEAR(distortion_b(y1, bs.B(), 6), 0.999225, 2e-6);
}

TEST(Probability, BalancedTableValues) {
  const SqueezingSpec sq = SqueezingSpec::from_db(9.99995);
  const BeamSplitterSpec bs = BeamSplitterSpec::from_B(8380.3);
  EXPECT_NEAR(success_probability(sq, bs, 2, ProbabilityMode::kBalanced), 0.192342, 1e-6);
  EXPECT_NEAR(success_probability(sq, bs, 4, ProbabilityMode::kBalanced), 0.096522, 1e-6);
  EXPECT_NEAR(success_probability(sq, bs, 6, ProbabilityMode::kBalanced), 0.053819, 1e-6);
  const SqueezingSpec tiny = SqueezingSpec::from_db(0.0002);
  EXPECT_NEAR(success_probability(tiny, bs, 0, ProbabilityMode::kBalanced), 0.99994, 1e-5);
}

TEST(Probability, UnbalancedTableValues) {
  auto p = [](double s_db, double B, int k) {
    return success_probability(SqueezingSpec::from_db(s_db), BeamSplitterSpec::from_B(B), k,
                               ProbabilityMode::kUnbalancedGate);
  };
  EXPECT_NEAR(p(24.535, 0.01, 1), 0.26161, 2e-5);
  EXPECT_NEAR(p(29.996, 0.01, 3), 0.081448, 2e-6);
  EXPECT_NEAR(p(1e-6, 99.0, 0), 0.995, 1e-3);
}

TEST(Probability, ModesAgreeWithGeneralQubit) {
  for (double s_db : {2.0, 7.0, 11.0}) {
    for (double B : {0.1, 1.0, 30.0}) {
      const SqueezingSpec sq = SqueezingSpec::from_db(s_db);
      const BeamSplitterSpec bs = BeamSplitterSpec::from_B(B);
      const double y1 = ReducedSqueezing::from(sq, bs).y1;
      for (int k = 0; k <= 5; ++k) {
        EXPECT_NEAR(success_probability(sq, bs, k, ProbabilityMode::kBalanced),
                    success_probability(sq, bs, DVQubit::balanced(), k), 1e-15);
        const DVQubit tuned = DVQubit::for_unit_distortion(distortion_b(y1, B, k));
        const double gate = success_probability(sq, bs, k, ProbabilityMode::kUnbalancedGate);
        EXPECT_NEAR(gate / success_probability(sq, bs, tuned, k), 1.0, 1e-12);
        // c0^2 Z N / (2 cosh s)
        const double b = distortion_b(y1, B, k);
        const double c0 = amplitude_c0(y1, B, k);
        EXPECT_NEAR(success_probability(sq, bs, k, ProbabilityMode::kBalanced) /
                        (c0 * c0 * z_derivative(y1, k) * (1.0 + b * b) / (2.0 * std::cosh(sq.s()))),
                    1.0, 1e-12);
      }
    }
  }
}

TEST(Probability, SumsToOne) {
  for (double s_db : {1.0, 6.0}) {
    const SqueezingSpec sq = SqueezingSpec::from_db(s_db);
    const BeamSplitterSpec bs = BeamSplitterSpec::from_B(0.8);
    const DVQubit q = DVQubit::from_ratio(0.5);
    double total = 0.0;
    for (int k = 0; k < 200; ++k) total += success_probability(sq, bs, q, k);
    EXPECT_NEAR(total, 1.0, 1e-12);
  }
}

TEST(Probability, SingleOddOutcomeWithoutSqueezing) {
  // The photon stays in mode 2 with amplitude t.
  const SqueezingSpec sq = SqueezingSpec::from_db(0.0);
  const BeamSplitterSpec bs = BeamSplitterSpec::from_B(3.0);
  EXPECT_NEAR(success_probability(sq, bs, 1, ProbabilityMode::kBalanced), 0.5 * 0.25, 1e-15);
}

TEST(HybridState, VectorAndOverlap) {
  const SqueezingSpec sq = SqueezingSpec::from_db(6.0);
  const BeamSplitterSpec bs = BeamSplitterSpec::from_B(2.0);
  for (QubitForm form : {QubitForm::kXi, QubitForm::kZeta}) {
    for (int k = 0; k <= 4; ++k) {
      const HybridState h = build_hybrid(sq, bs, DVQubit::from_ratio(1.5, form), k);
      EXPECT_NEAR(h.qubit_vector().norm(), 1.0, 1e-15);
      EXPECT_NEAR(hybrid_overlap(h, h), 1.0, 1e-12);
      EXPECT_EQ(h.even_branch().parity(), Parity::kEven);
      EXPECT_EQ(h.odd_branch().parity(), Parity::kOdd);
      const double b = h.b;
      EXPECT_NEAR(negativity(h), 2.0 * b / (1.0 + b * b), 1e-15);
    }
  }
}

TEST(HybridState, XiVectorLayout) {
  const HybridState h = build_hybrid(SqueezingSpec::from_db(4.0), BeamSplitterSpec::from_B(1.0), DVQubit::balanced(), 2);
  const double n = std::sqrt(h.norm());
  // even k: (b |-_CV>|0> + |+_CV>|1>) / sqrt(N)
  EXPECT_NEAR(h.qubit_vector()[1], 1.0 / n, 1e-15);
  EXPECT_NEAR(h.qubit_vector()[2], h.b / n, 1e-15);
  EXPECT_EQ(h.qubit_vector()[0], 0.0);
  EXPECT_EQ(h.qubit_vector()[3], 0.0);
}

TEST(HybridState, NegativityPeaksAtUnitDistortion) {
  HybridState h;
  h.b = 1.0;
  EXPECT_EQ(negativity(h), 1.0);
  h.b = 0.5;
  EXPECT_LT(negativity(h), 1.0);
}

}  // namespace
}  // namespace bscz
