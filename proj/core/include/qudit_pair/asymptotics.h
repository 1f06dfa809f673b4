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

// Large-S, short-time asymptotics of the coherent-pair squared I-concurrence.
//
// Replacing the binomial weights and cos^{4S} by Gaussians and the sum over M
// by an integral gives the smooth curve
//
//   C^2 ~ ((2S+1)/2S) (1 - (1 - erf(sqrt((tau^2+1)/8S))) / sqrt(1+tau^2) - q),
//
// and adding back the partial revivals of cos^{4S}(M tau/2S) near
// tau = 2 pi S n / M gives a train of Gaussian dips below it.

#ifndef QUDIT_PAIR_ASYMPTOTICS_H_
#define QUDIT_PAIR_ASYMPTOTICS_H_

#include "qudit_pair/spin_core.h"

namespace qudit_pair {

/// Error function (backed by std::erf).
double erf(double x);

/// Largest coherence order kept in the minima train.
struct MinimaConfig {
    int m_max = 4;

    /// Throws std::domain_error unless 2 <= m_max <= 2S.
    void validate(SpinMagnitude s) const;
};

/// Weight of the non-decaying M = 0 coherences used by the asymptotic forms:
/// exact 2^{-4S} C(4S,2S) for 2S <= 512, 1/sqrt(2 pi S) above.
double asymptotic_static_weight(SpinMagnitude s);

/// Smooth asymptotic C^2(tau). Intended for S >= 1 and tau << 4 pi S, but
/// evaluates for any S >= 1/2.
double c2_coherent_asymptotic(SpinMagnitude s, double tau);

/// (2/sqrt(2 pi S)) sum_{M=2}^{m_max} sum_{n=1}^{M} exp(-(M^2/2S)(1 + (tau - 2 pi S n/M)^2)).
double minima_train(SpinMagnitude s, double tau, const MinimaConfig &cfg);

/// c2_coherent_asymptotic with the minima train subtracted inside the
/// (2S+1)/2S prefactor.
double c2_coherent_asymptotic_minima(SpinMagnitude s, double tau, const MinimaConfig &cfg = {});

}  // namespace qudit_pair

#endif  // QUDIT_PAIR_ASYMPTOTICS_H_
