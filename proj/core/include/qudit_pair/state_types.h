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

// Value types shared by the closed-form modules and the brute-force oracle.

#ifndef QUDIT_PAIR_STATE_TYPES_H_
#define QUDIT_PAIR_STATE_TYPES_H_

#include <complex>

#include <Eigen/Dense>

#include "qudit_pair/spin_core.h"

namespace qudit_pair {

inline constexpr double kNormTolerance = 1e-10;

/// Pure state of one spin: amplitudes C_m in k = m + S order, unit norm.
class SingleSpinState {
   public:
    /// Throws std::domain_error on a length mismatch or if |norm^2 - 1| > kNormTolerance.
    SingleSpinState(SpinMagnitude s, Eigen::VectorXcd amps);

    SpinMagnitude spin() const {
        return s_;
    }
    const Eigen::VectorXcd &amplitudes() const {
        return amps_;
    }
    std::complex<double> amplitude(int k) const {
        return amps_(k);
    }

   private:
    SpinMagnitude s_;
    Eigen::VectorXcd amps_;
};

/// Pure state of the spin pair. Amplitude (k1, k2) lives at k1 * d + k2.
/// Only the length is validated on construction; consumers that need unit
/// norm check it themselves.
class JointState {
   public:
    JointState(SpinMagnitude s, Eigen::VectorXcd amps);

    SpinMagnitude spin() const {
        return s_;
    }
    const Eigen::VectorXcd &amplitudes() const {
        return amps_;
    }
    std::complex<double> amplitude(int k1, int k2) const {
        return amps_(static_cast<Eigen::Index>(k1) * s_.dim() + k2);
    }
    double squared_norm() const {
        return amps_.squaredNorm();
    }

   private:
    SpinMagnitude s_;
    Eigen::VectorXcd amps_;
};

/// Coupling J (angular frequency) and spin magnitude of H = -(J/S) S1z S2z.
class SystemConfig {
   public:
    /// Throws std::domain_error unless j > 0 is finite and 2S >= 1.
    SystemConfig(SpinMagnitude s, double j = 1.0);

    SpinMagnitude spin() const {
        return s_;
    }
    double coupling() const {
        return j_;
    }
    /// Recurrence time T = 4 pi S / J.
    double period() const;

   private:
    SpinMagnitude s_;
    double j_;
};

/// Throws std::domain_error when 2S = 0 (formulas that divide by S).
void require_positive_spin(SpinMagnitude s, const char *where);

}  // namespace qudit_pair

#endif  // QUDIT_PAIR_STATE_TYPES_H_
