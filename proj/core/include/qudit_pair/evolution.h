// Copyright 2026 The qudit-pair Authors
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

#ifndef QUDIT_PAIR_EVOLUTION_H_
#define QUDIT_PAIR_EVOLUTION_H_

#include "qudit_pair/state_types.h"

namespace qudit_pair {

// H = -(J/S) S1z S2z is diagonal in the product Z basis, so U(t) = exp(-iHt)
// multiplies amplitude (m, n) by exp(+i t m n J / S). Phases are formed from
// the integer product (2m)(2n) to keep half-integer spins exact.

/// |psi1> (x) |psi2>.
JointState product_state(const SingleSpinState &psi1, const SingleSpinState &psi2);

/// Amplitude (m, n) = C_m C_n exp(i t m n J/S). Throws std::domain_error if
/// the spins of psi1, psi2 and cfg differ.
JointState evolve_product(const SingleSpinState &psi1, const SingleSpinState &psi2, double t,
                          const SystemConfig &cfg);

/// Applies U(t) to an arbitrary joint state.
JointState evolve_joint(const JointState &joint, double t, const SystemConfig &cfg);

/// T = 4 pi S / J.
double recurrence_period(const SystemConfig &cfg);

}  // namespace qudit_pair

#endif  // QUDIT_PAIR_EVOLUTION_H_
