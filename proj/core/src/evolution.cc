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

#include "qudit_pair/evolution.h"

#include <complex>
#include <stdexcept>
#include <string>

namespace qudit_pair {

namespace {

void require_same_spin(SpinMagnitude a, SpinMagnitude b, const char *where) {
    if (a != b) {
        throw std::domain_error(std::string(where) + ": mismatched spin magnitudes (2S=" +
                                std::to_string(a.two_s()) + " vs 2S=" + std::to_string(b.two_s()) + ")");
    }
}

// exp(i t m n J / S) = exp(i t J (2m)(2n) / (2 * 2S)), in extended precision:
// a repeated step reuses the same rounded factor, so its error would otherwise
// accumulate linearly in the norm.
std::complex<long double> ising_phase(const SystemConfig &cfg, double t, long long twice_m_twice_n) {
    const long double rate = static_cast<long double>(cfg.coupling()) / (2.0L * cfg.spin().two_s());
    return std::polar(1.0L, static_cast<long double>(t) * rate * static_cast<long double>(twice_m_twice_n));
}

}  // namespace

JointState product_state(const SingleSpinState &psi1, const SingleSpinState &psi2) {
    require_same_spin(psi1.spin(), psi2.spin(), "product_state");
    const int d = psi1.spin().dim();
    Eigen::VectorXcd amps(static_cast<Eigen::Index>(d) * d);
    for (int k1 = 0; k1 < d; k1++) {
        for (int k2 = 0; k2 < d; k2++) {
            amps(static_cast<Eigen::Index>(k1) * d + k2) = psi1.amplitude(k1) * psi2.amplitude(k2);
        }
    }
    return JointState(psi1.spin(), std::move(amps));
}

JointState evolve_product(const SingleSpinState &psi1, const SingleSpinState &psi2, double t,
                          const SystemConfig &cfg) {
    require_same_spin(psi1.spin(), cfg.spin(), "evolve_product");
    return evolve_joint(product_state(psi1, psi2), t, cfg);
}

JointState evolve_joint(const JointState &joint, double t, const SystemConfig &cfg) {
    require_same_spin(joint.spin(), cfg.spin(), "evolve_joint");
    const SpinMagnitude s = cfg.spin();
    const int d = s.dim();
    Eigen::VectorXcd amps = joint.amplitudes();
    for (int k1 = 0; k1 < d; k1++) {
        const long long tm = s.twice_projection(k1);
        for (int k2 = 0; k2 < d; k2++) {
            auto &a = amps(static_cast<Eigen::Index>(k1) * d + k2);
            a = std::complex<double>(std::complex<long double>(a) * ising_phase(cfg, t, tm * s.twice_projection(k2)));
        }
    }
    return JointState(s, std::move(amps));
}

double recurrence_period(const SystemConfig &cfg) {
    return cfg.period();
}

}  // namespace qudit_pair
