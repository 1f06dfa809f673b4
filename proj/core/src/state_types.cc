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

#include "qudit_pair/state_types.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace qudit_pair {

SingleSpinState::SingleSpinState(SpinMagnitude s, Eigen::VectorXcd amps) : s_(s), amps_(std::move(amps)) {
    if (amps_.size() != s_.dim()) {
        throw std::domain_error("single-spin state needs " + std::to_string(s_.dim()) + " amplitudes, got " +
                                std::to_string(amps_.size()));
    }
    double n2 = amps_.squaredNorm();
    if (!(std::abs(n2 - 1.0) <= kNormTolerance)) {
        throw std::domain_error("single-spin state is not normalized (norm^2=" + std::to_string(n2) + ")");
    }
}

JointState::JointState(SpinMagnitude s, Eigen::VectorXcd amps) : s_(s), amps_(std::move(amps)) {
    Eigen::Index d = s_.dim();
    if (amps_.size() != d * d) {
        throw std::domain_error("joint state needs d^2=" + std::to_string(d * d) + " amplitudes, got " +
                                std::to_string(amps_.size()));
    }
}

SystemConfig::SystemConfig(SpinMagnitude s, double j) : s_(s), j_(j) {
    require_positive_spin(s, "SystemConfig");
    if (!(j > 0) || !std::isfinite(j)) {
        throw std::domain_error("coupling J must be positive and finite");
    }
}

double SystemConfig::period() const {
    return 2.0 * std::numbers::pi * s_.two_s() / j_;
}

void require_positive_spin(SpinMagnitude s, const char *where) {
    if (s.two_s() < 1) {
        throw std::domain_error(std::string(where) + ": requires S >= 1/2");
    }
}

}  // namespace qudit_pair
