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

// Entanglement of the evolved pair, measured by the squared I-concurrence
//
//     C^2 = d/(d-1) (1 - Tr rho_1^2),
//
// where rho_1 is spin 1's reduced density matrix. For the two product
// initial states used throughout (coherent and uniform), the purity Tr rho_1^2
// has closed forms as a sum over coherence orders M = m1 - m2.

#ifndef QUDIT_PAIR_ENTANGLEMENT_H_
#define QUDIT_PAIR_ENTANGLEMENT_H_

#include <Eigen/Dense>

#include "qudit_pair/state_types.h"

namespace qudit_pair {

enum class StateKind { Coherent, Uniform };

/// Spin-1 reduced density matrix: Hermitian, unit trace, positive semidefinite.
class ReducedDensity {
   public:
    /// Throws std::domain_error if rho is not square d x d, not Hermitian, or
    /// its trace differs from 1 (tolerance kNormTolerance).
    ReducedDensity(SpinMagnitude s, Eigen::MatrixXcd rho);

    SpinMagnitude spin() const {
        return s_;
    }
    const Eigen::MatrixXcd &matrix() const {
        return rho_;
    }

   private:
    SpinMagnitude s_;
    Eigen::MatrixXcd rho_;
};

/// Partial trace over spin 2. Throws std::domain_error if |joint|^2 is not 1.
ReducedDensity reduced_density(const JointState &joint);

/// Tr rho^2 = sum_ij |rho_ij|^2.
double purity(const ReducedDensity &rho);

/// d/(d-1) (1 - purity), clamped to [0, 1]. Throws std::domain_error when
/// purity lies outside [1/d, 1] by more than 1e-9, or d < 2.
double c_squared(double purity_value, int d);

/// Coherent pair:
///   Tr rho^2 = 2^{-4S} C(4S,2S) + 2^{1-4S} sum_{M=1}^{2S} C(4S, 2S+M) cos^{4S}(M tau / 2S).
/// Terms are formed in log space and summed with compensation; above S = 100
/// they are also sorted by decreasing magnitude.
double purity_coherent_closed(SpinMagnitude s, double tau);

/// Uniform pair:
///   Tr rho^2 = 1/d + (2/d^4) sum_{M=1}^{d-1} (d-M) (1 - cos(tau M d/S)) / (1 - cos(tau M/S)).
double purity_uniform_closed(SpinMagnitude s, double tau);

/// Closed-form purity for either initial state.
double purity_closed(StateKind kind, SpinMagnitude s, double tau);

/// Closed-form C^2 for either initial state.
double c2_closed(StateKind kind, SpinMagnitude s, double tau);

/// Leading small-time coefficient a in C^2 ~ a tau^2:
///   coherent (2S+1)/(4S), uniform (d+1) d^3 / (144 S^2).
///
/// The uniform expression is the published one. The curvature of the uniform
/// curve is actually d (d+1)^2 / (36 S), larger by 2 (d^2-1)/d^2; see the
/// entanglement tests.
double small_time_coefficient(StateKind kind, SpinMagnitude s);

/// Average of C^2 over one recurrence period:
///   coherent ((2S+1)/(2S)) (1 - q)^2 with q = 2^{-4S} C(4S,2S); uniform 1 - 1/d.
double time_average(StateKind kind, SpinMagnitude s);

/// q = 2^{-4S} C(4S, 2S): the weight of the non-decaying M = 0 coherences.
double coherent_static_weight(SpinMagnitude s);

/// Stirling form of coherent_static_weight, 1/sqrt(2 pi S).
double coherent_static_weight_stirling(SpinMagnitude s);

}  // namespace qudit_pair

#endif  // QUDIT_PAIR_ENTANGLEMENT_H_
