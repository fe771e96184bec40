// Copyright 2026 The qpc Authors
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

#pragma once

#include <cmath>
#include <complex>

#include "qpc/states.hpp"

namespace qpc::testing {

inline const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

inline QubitState ket0() { return QubitState(1.0, 0.0); }
inline QubitState ket1() { return QubitState(0.0, 1.0); }
inline QubitState ket_plus() { return QubitState(kInvSqrt2, kInvSqrt2); }
inline QubitState ket_minus() { return QubitState(kInvSqrt2, -kInvSqrt2); }
inline QubitState ket_plus_i() { return QubitState(kInvSqrt2, complex(0.0, kInvSqrt2)); }

/// |0>, |+>, |+i>: Bloch vectors z, x, y spanning one octant.
inline StateFamily octant_family() { return StateFamily({ket0(), ket_plus(), ket_plus_i()}); }

}  // namespace qpc::testing
