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

#ifndef BSCZ_TYPES_HPP_
#define BSCZ_TYPES_HPP_

#include <Eigen/Dense>
#include <string_view>

namespace bscz {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Single-mode squeezed vacuum input, held in its three equivalent
/// parameterizations: amplitude s, decibels S = 20 s / ln 10, and
/// y = tanh(s) / 2.
class SqueezingSpec {
 public:
  static SqueezingSpec from_amplitude(double s);
  static SqueezingSpec from_db(double s_db);
  static SqueezingSpec from_y(double y);

  double s() const { return s_; }
  double s_db() const { return s_db_; }
  double y() const { return y_; }

  /// <n> = sinh^2 s
  double mean_photons() const;

 private:
  SqueezingSpec(double s, double s_db, double y) : s_(s), s_db_(s_db), y_(y) {}
  double s_;
  double s_db_;
  double y_;
};

/// Beam splitter [t -r; r t] with B = r^2 / t^2.
class BeamSplitterSpec {
 public:
  static BeamSplitterSpec from_B(double B);
  static BeamSplitterSpec from_transmittance(double t);

  double t() const { return t_; }
  double r() const { return r_; }
  double B() const { return B_; }

  /// Same device with r -> -r, the inverse unitary.
  BeamSplitterSpec inverse() const { return BeamSplitterSpec(t_, -r_, B_); }

 private:
  BeamSplitterSpec(double t, double r, double B) : t_(t), r_(r), B_(B) {}
  double t_;
  double r_;
  double B_;
};

/// y1 = y t^2 = y / (1 + B)
struct ReducedSqueezing {
  double y1 = 0.0;

  static ReducedSqueezing from(const SqueezingSpec& sq, const BeamSplitterSpec& bs) {
    return ReducedSqueezing{sq.y() / (1.0 + bs.B())};
  }
};

/// xi: a0|01> + a1|10> (delocalized photon); zeta: a0|00> + a1|11>.
enum class QubitForm { kXi, kZeta };

struct DVQubit {
  double a0 = 0.0;
  double a1 = 0.0;
  QubitForm form = QubitForm::kXi;

  static DVQubit balanced(QubitForm form = QubitForm::kXi);
  /// Normalized qubit with a1 / a0 = ratio (ratio > 0).
  static DVQubit from_ratio(double ratio, QubitForm form = QubitForm::kXi);
  /// Qubit for which a1 b / a0 = 1: a0 = b / sqrt(1 + b^2), a1 = 1 / sqrt(1 + b^2).
  static DVQubit for_unit_distortion(double b, QubitForm form = QubitForm::kXi);
};

enum class Parity { kEven, kOdd, kIndefinite };

std::string_view to_string(Parity p);
std::string_view to_string(QubitForm f);

/// Truncated single-mode state; index n is the photon number. Signed real
/// amplitudes.
class FockVector {
 public:
  FockVector() = default;
  FockVector(Vector amplitudes, Parity parity);

  const Vector& amplitudes() const { return amplitudes_; }
  int truncation() const { return static_cast<int>(amplitudes_.size()); }
  Parity parity() const { return parity_; }
  double operator[](int n) const { return n < truncation() ? amplitudes_[n] : 0.0; }
  double squared_norm() const { return amplitudes_.squaredNorm(); }

 private:
  Vector amplitudes_;
  Parity parity_ = Parity::kIndefinite;
};

/// <a|b> over the common support; missing levels count as zero.
double inner_product(const FockVector& a, const FockVector& b);

}  // namespace bscz

#endif  // BSCZ_TYPES_HPP_
