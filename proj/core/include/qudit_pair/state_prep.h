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

#ifndef QUDIT_PAIR_STATE_PREP_H_
#define QUDIT_PAIR_STATE_PREP_H_

#include "qudit_pair/spin_core.h"
#include "qudit_pair/state_types.h"

namespace qudit_pair {

/// |S>_Z: amplitude 1 at m = S.
SingleSpinState ground_state(SpinMagnitude s);

/// Maximal-X-projection coherent state, C_m = 2^{-S} sqrt(C(2S, S+m)).
/// Amplitudes are built in log space, so any S that fits in memory works.
SingleSpinState coherent_x(SpinMagnitude s);

/// Equal-weight, zero-phase superposition, C_m = d^{-1/2}.
SingleSpinState uniform_state(SpinMagnitude s);

/// exp(-i theta S_Y) |state>, from the eigendecomposition of S_Y.
SingleSpinState rotate_y(const SingleSpinState &state, double theta);

/// d-point quantum Fourier transform, U_{jk} = d^{-1/2} exp(2 pi i j k / d),
/// acting in the k = m + S index order.
SingleSpinState qft(const SingleSpinState &state);

/// Compares after removing the global phase of the largest-magnitude amplitude
/// of `a` from both vectors.
bool equal_up_to_global_phase(const Eigen::VectorXcd &a, const Eigen::VectorXcd &b, double tolerance);

}  // namespace qudit_pair

#endif  // QUDIT_PAIR_STATE_PREP_H_
