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

#ifndef BSCZ_BSCZ_HPP_
#define BSCZ_BSCZ_HPP_

#include "bscz/detector.hpp"
#include "bscz/error.hpp"
#include "bscz/gates.hpp"
#include "bscz/hybrid.hpp"
#include "bscz/numerics.hpp"
#include "bscz/oracle.hpp"
#include "bscz/parallel.hpp"
#include "bscz/states.hpp"
#include "bscz/types.hpp"

#endif  // BSCZ_BSCZ_HPP_
