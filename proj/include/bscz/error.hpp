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

#ifndef BSCZ_ERROR_HPP_
#define BSCZ_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace bscz {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A series could not be certified within its term budget.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// A Fock-space truncation is too small for the requested accuracy.
class TruncationError : public Error {
 public:
  using Error::Error;
};

/// An argument lies outside the domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The DV qubit has a0 = 0, so b' = a1 b / a0 is undefined.
class DegenerateQubitError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Outcomes requested for a common gate scenario carry different b_k.
class InconsistentDistortionError : public Error {
 public:
  using Error::Error;
};

}  // namespace bscz

#endif  // BSCZ_ERROR_HPP_
