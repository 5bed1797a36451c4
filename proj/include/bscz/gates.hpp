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

#ifndef BSCZ_GATES_HPP_
#define BSCZ_GATES_HPP_

#include <vector>

#include "bscz/hybrid.hpp"

namespace bscz {

/// R_y(theta) = [t -r; r t] on the photonic qubit.
struct RotationParams {
  double theta = 0.0;
  double t_k = 1.0;
  double r_k = 0.0;
};

/// t_k = (b + 1) / sqrt(2 N), r_k = (b - 1) / sqrt(2 N), N = 1 + b^2.
RotationParams rotation_params(double b);

/// Distance between CZ R_2 Z_1^p |+_CV>|+> and the state's own 4-vector.
/// The xi layout uses p = k + 1 and R^T, zeta uses p = k and R. Z_1 and CZ
/// act in the computational CV basis |0_CV>, |1_CV> = (|+_CV> +- |-_CV>) / sqrt 2.
double cz_decomposition_residual(const HybridState& h);

/// Same check with the rotation built from `rotation_b` instead of h.b.
double cz_decomposition_residual(const HybridState& h, double rotation_b);

struct BRange {
  double lo = 1e-2;
  double hi = 1e4;

  void validate() const;
};

struct LevelLine {
  int k = 0;
  double s_db = 0.0;
  std::vector<double> roots;
};

struct LevelLineOptions {
  int grid_points = 2000;
  double b_tolerance = 1e-10;
  int jobs = 1;
};

/// Roots in B of b'_k(S, B) = 1, ascending.
LevelLine find_level_lines(double s_db, int k, BRange range, const DVQubit& qubit = DVQubit::balanced(),
                           LevelLineOptions opts = {}, const SeriesConfig& cfg = {});

struct OptimizeOptions {
  int grid_points = 400;
  double relative_tolerance = 1e-4;
  int jobs = 1;
};

struct OptimizeResult {
  double B_opt = 0.0;
  double P_max = 0.0;
  /// B_opt sits on the edge of the range, so the true maximum may lie outside.
  bool at_boundary = false;
};

OptimizeResult optimize_B(double s_db, int k, ProbabilityMode mode, BRange range, OptimizeOptions opts = {},
                          const SeriesConfig& cfg = {});

struct ScenarioOptions {
  ProbabilityMode mode = ProbabilityMode::kUnbalancedGate;
  bool require_common_b = true;
  double common_b_tolerance = 1e-3;
};

struct GateScenario {
  double s_db = 0.0;
  double B = 0.0;
  std::vector<int> outcome_set;
  std::vector<double> b_values;
  std::vector<double> probabilities;
  double common_b = 0.0;
  /// max b_k - min b_k over the outcome set
  double b_spread = 0.0;
  DVQubit qubit;
  double P_CZ = 0.0;
};

/// Sums the success probabilities of the outcome set. With
/// `require_common_b` a spread of the b_k beyond the tolerance raises
/// InconsistentDistortionError.
GateScenario gate_scenario(double s_db, double B, const std::vector<int>& outcome_set, ScenarioOptions opts = {},
                           const SeriesConfig& cfg = {});

}  // namespace bscz

#endif  // BSCZ_GATES_HPP_
