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

#include "bscz/types.hpp"

#include <cmath>
#include <sstream>

#include "bscz/error.hpp"

namespace bscz {

namespace {
const double kLn10 = std::log(10.0);
}

SqueezingSpec SqueezingSpec::from_amplitude(double s) {
  if (!(s >= 0.0) || !std::isfinite(s)) throw DomainError("squeezing amplitude s must be finite and >= 0");
  // S = -10 log10(exp(-2 s))
  return SqueezingSpec(s, 20.0 * s / kLn10, 0.5 * std::tanh(s));
}

SqueezingSpec SqueezingSpec::from_db(double s_db) {
  if (!(s_db >= 0.0) || !std::isfinite(s_db)) throw DomainError("squeezing in dB must be finite and >= 0");
  const double s = s_db * kLn10 / 20.0;
  return SqueezingSpec(s, s_db, 0.5 * std::tanh(s));
}

SqueezingSpec SqueezingSpec::from_y(double y) {
  if (!(y >= 0.0 && y < 0.5)) throw DomainError("squeezing parameter y must lie in [0, 1/2)");
  const double s = std::atanh(2.0 * y);
  return SqueezingSpec(s, 20.0 * s / kLn10, y);
}

double SqueezingSpec::mean_photons() const {
  const double sh = std::sinh(s_);
  return sh * sh;
}

BeamSplitterSpec BeamSplitterSpec::from_B(double B) {
  if (!(B > 0.0) || !std::isfinite(B)) throw DomainError("beam-splitter parameter B must be finite and > 0");
  const double t = 1.0 / std::sqrt(1.0 + B);
  const double r = std::sqrt(B / (1.0 + B));
  return BeamSplitterSpec(t, r, B);
}

BeamSplitterSpec BeamSplitterSpec::from_transmittance(double t) {
  if (!(t > 0.0 && t < 1.0)) throw DomainError("transmittance t must lie in (0, 1)");
  const double r = std::sqrt(1.0 - t * t);
  return BeamSplitterSpec(t, r, (r * r) / (t * t));
}

DVQubit DVQubit::balanced(QubitForm form) {
  const double a = 1.0 / std::sqrt(2.0);
  return DVQubit{a, a, form};
}

DVQubit DVQubit::from_ratio(double ratio, QubitForm form) {
  if (!(ratio > 0.0) || !std::isfinite(ratio)) throw DomainError("a1/a0 ratio must be finite and > 0");
  const double a0 = 1.0 / std::sqrt(1.0 + ratio * ratio);
  return DVQubit{a0, ratio * a0, form};
}

DVQubit DVQubit::for_unit_distortion(double b, QubitForm form) {
  if (!(b > 0.0) || !std::isfinite(b)) throw DomainError("distortion factor b must be finite and > 0");
  const double n = std::sqrt(1.0 + b * b);
  return DVQubit{b / n, 1.0 / n, form};
}

std::string_view to_string(Parity p) {
  switch (p) {
    case Parity::kEven:
      return "even";
    case Parity::kOdd:
      return "odd";
    case Parity::kIndefinite:
      break;
  }
  return "indefinite";
}

std::string_view to_string(QubitForm f) { return f == QubitForm::kXi ? "xi" : "zeta"; }

FockVector::FockVector(Vector amplitudes, Parity parity) : amplitudes_(std::move(amplitudes)), parity_(parity) {
  if (parity_ == Parity::kIndefinite) return;
  const int start = parity_ == Parity::kEven ? 1 : 0;
  for (int n = start; n < truncation(); n += 2) {
    if (amplitudes_[n] != 0.0) {
      std::ostringstream os;
      os << "FockVector tagged " << to_string(parity_) << " has weight at n = " << n;
      throw DomainError(os.str());
    }
  }
}

double inner_product(const FockVector& a, const FockVector& b) {
  const int n = std::min(a.truncation(), b.truncation());
  return a.amplitudes().head(n).dot(b.amplitudes().head(n));
}

}  // namespace bscz
