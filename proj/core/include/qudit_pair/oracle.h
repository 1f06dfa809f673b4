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

// Brute-force ground truth for small spins: explicit Hamiltonian diagonal,
// full joint state, operator expectation values and an explicit partial trace.
// Nothing here calls the closed-form modules; only the spin_core operators and
// the shared state types are used.

#ifndef QUDIT_PAIR_ORACLE_H_
#define QUDIT_PAIR_ORACLE_H_

#include <stdexcept>
#include <vector>

#include "qudit_pair/spin_core.h"
#include "qudit_pair/state_types.h"

namespace qudit_pair {

/// Thrown when a brute-force computation would exceed the oracle's size limit.
class ResourceError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kOracleMaxTwoS = 128;

/// Diagonal of H = -(J/S) S1z (x) S2z in the (k1, k2) row-major product basis.
class DenseHamiltonian {
   public:
    explicit DenseHamiltonian(const SystemConfig &cfg);

    SpinMagnitude spin() const {
        return s_;
    }
    const std::vector<double> &diagonal() const {
        return diag_;
    }

   private:
    SpinMagnitude s_;
    std::vector<double> diag_;
};

/// exp(-i H t) (psi1 (x) psi2). Throws ResourceError above 2S = 128.
JointState oracle_evolve(const SingleSpinState &psi1, const SingleSpinState &psi2, double t,
                         const SystemConfig &cfg);

/// <joint| S_X (x) I |joint>.
double oracle_mean_s1x(const JointState &joint);

/// Tr_1 (Tr_2 |joint><joint|)^2 by explicit index loops.
double oracle_purity(const JointState &joint);

}  // namespace qudit_pair

#endif  // QUDIT_PAIR_ORACLE_H_
