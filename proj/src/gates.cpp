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

#include "bscz/gates.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bscz/error.hpp"
#include "bscz/parallel.hpp"

namespace bscz {

RotationParams rotation_params(double b) {
  if (!(b > 0.0)) throw DomainError("rotation_params requires b > 0");
  const double norm = std::sqrt(2.0 * (1.0 + b * b));
  RotationParams p;
  p.t_k = (b + 1.0) / norm;
  p.r_k = (b - 1.0) / norm;
  p.theta = 2.0 * std::atan2(p.r_k, p.t_k);
  return p;
}

double cz_decomposition_residual(const HybridState& h) { return cz_decomposition_residual(h, h.b); }

double cz_decomposition_residual(const HybridState& h, double rotation_b) {
  const RotationParams rp = rotation_params(rotation_b);
  Eigen::Matrix2d rot;
  rot << rp.t_k, -rp.r_k, rp.r_k, rp.t_k;
  int power = h.k;
  if (h.layout == QubitForm::kXi) {
    rot.transposeInPlace();
    power += 1;
  }
  const Eigen::Matrix2d id = Eigen::Matrix2d::Identity();
  Eigen::Matrix2d z1;  // Z in the +/- coordinates
  z1 << 0, 1, 1, 0;
  Eigen::Matrix2d had;
  had << 1, 1, 1, -1;
  had /= std::sqrt(2.0);

  auto kron = [](const Eigen::Matrix2d& a, const Eigen::Matrix2d& b) {
    Eigen::Matrix4d m;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) m.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    return m;
  };
  const Eigen::Matrix4d to_comp = kron(had, id);
  const Eigen::Vector4d phases(1, 1, 1, -1);
  const Eigen::Matrix4d cz = to_comp.transpose() * phases.asDiagonal() * to_comp;

  Eigen::Vector4d v = Eigen::Vector4d(1, 1, 0, 0) / std::sqrt(2.0);
  if (power % 2 == 1) v = kron(z1, id) * v;
  v = cz * kron(id, rot) * v;
  return (v - h.qubit_vector()).norm();
}

void BRange::validate() const {
  if (!(lo > 0.0 && hi > lo)) throw DomainError("B range must satisfy 0 < lo < hi");
}

namespace {

std::vector<double> log_grid(BRange range, int points) {
  std::vector<double> g(points);
  const double a = std::log(range.lo), d = std::log(range.hi) - a;
  for (int i = 0; i < points; ++i) g[i] = i == points - 1 ? range.hi : std::exp(a + d * i / (points - 1));
  if (points > 0) g[0] = range.lo;
  return g;
}

}  // namespace

LevelLine find_level_lines(double s_db, int k, BRange range, const DVQubit& qubit, LevelLineOptions opts,
                           const SeriesConfig& cfg) {
  range.validate();
  if (opts.grid_points < 2) throw DomainError("level-line scan needs at least two grid points");
  const SqueezingSpec sq = SqueezingSpec::from_db(s_db);
  auto f = [&](double B) {
    const double y1 = ReducedSqueezing::from(sq, BeamSplitterSpec::from_B(B)).y1;
    return distortion_b_unbalanced(distortion_b(y1, B, k, cfg), qubit) - 1.0;
  };
  const std::vector<double> grid = log_grid(range, opts.grid_points);
  const std::vector<double> vals = parallel_map(opts.grid_points, opts.jobs, [&](int i) { return f(grid[i]); });

  LevelLine line{k, s_db, {}};
  for (int i = 0; i + 1 < opts.grid_points; ++i) {
    if (vals[i] == 0.0) {
      line.roots.push_back(grid[i]);
      continue;
    }
    if ((vals[i] < 0.0) == (vals[i + 1] < 0.0) || vals[i + 1] == 0.0) continue;
    double lo = std::log(grid[i]), hi = std::log(grid[i + 1]);
    double flo = vals[i];
    double mid = 0.5 * (lo + hi), fmid = f(std::exp(mid));
    for (int it = 0; it < 200 && std::abs(fmid) >= opts.b_tolerance; ++it) {
      if ((fmid < 0.0) == (flo < 0.0)) {
        lo = mid;
        flo = fmid;
      } else {
        hi = mid;
      }
      const double next = 0.5 * (lo + hi);
      if (next == mid) break;
      mid = next;
      fmid = f(std::exp(mid));
    }
    if (std::abs(fmid) < 1e-8) line.roots.push_back(std::exp(mid));
  }
  if (vals.back() == 0.0) line.roots.push_back(grid.back());
  return line;
}

OptimizeResult optimize_B(double s_db, int k, ProbabilityMode mode, BRange range, OptimizeOptions opts,
                          const SeriesConfig& cfg) {
  range.validate();
  if (opts.grid_points < 3) throw DomainError("optimizer needs at least three grid points");
  const SqueezingSpec sq = SqueezingSpec::from_db(s_db);
  auto p = [&](double B) { return success_probability(sq, BeamSplitterSpec::from_B(B), k, mode, cfg); };
  const std::vector<double> grid = log_grid(range, opts.grid_points);
  const std::vector<double> vals = parallel_map(opts.grid_points, opts.jobs, [&](int i) { return p(grid[i]); });

  int best = 0;
  for (int i = 1; i < opts.grid_points; ++i)
    if (vals[i] > vals[best] * (1.0 + 1e-9)) best = i;

  // Golden section in log B over the neighbouring grid cells.
  double a = std::log(grid[std::max(best - 1, 0)]);
  double b = std::log(grid[std::min(best + 1, opts.grid_points - 1)]);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  const double tol = std::log1p(opts.relative_tolerance) / 4.0;
  double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
  double fc = p(std::exp(c)), fd = p(std::exp(d));
  while (b - a > tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = p(std::exp(c));
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = p(std::exp(d));
    }
  }
  OptimizeResult r;
  r.B_opt = std::exp(0.5 * (a + b));
  r.P_max = p(r.B_opt);
  if (vals[best] > r.P_max) {
    r.B_opt = grid[best];
    r.P_max = vals[best];
  }
  const double edge = std::log1p(opts.relative_tolerance);
  r.at_boundary = std::log(r.B_opt / range.lo) <= edge || std::log(range.hi / r.B_opt) <= edge;
  return r;
}

GateScenario gate_scenario(double s_db, double B, const std::vector<int>& outcome_set, ScenarioOptions opts,
                           const SeriesConfig& cfg) {
  if (outcome_set.empty()) throw DomainError("outcome set must not be empty");
  const SqueezingSpec sq = SqueezingSpec::from_db(s_db);
  const BeamSplitterSpec bs = BeamSplitterSpec::from_B(B);
  const double y1 = ReducedSqueezing::from(sq, bs).y1;
  GateScenario g;
  g.s_db = s_db;
  g.B = B;
  g.outcome_set = outcome_set;
  for (int k : outcome_set) {
    g.b_values.push_back(distortion_b(y1, B, k, cfg));
    g.probabilities.push_back(success_probability(sq, bs, k, opts.mode, cfg));
    g.P_CZ += g.probabilities.back();
  }
  const auto [mn, mx] = std::minmax_element(g.b_values.begin(), g.b_values.end());
  g.b_spread = *mx - *mn;
  double sum = 0.0;
  for (double b : g.b_values) sum += b;
  g.common_b = sum / static_cast<double>(g.b_values.size());
  if (opts.require_common_b && g.b_spread > opts.common_b_tolerance) {
    std::ostringstream msg;
    msg.precision(6);
    msg << "distortion factors disagree:";
    for (std::size_t i = 0; i < outcome_set.size(); ++i) msg << " b_" << outcome_set[i] << "=" << g.b_values[i];
    throw InconsistentDistortionError(msg.str());
  }
  g.qubit = opts.mode == ProbabilityMode::kBalanced ? DVQubit::balanced() : DVQubit::for_unit_distortion(g.common_b);
  return g;
}

}  // namespace bscz
