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

#include "qudit_pair/oracle.h"

#include <complex>
#include <string>

namespace qudit_pair {

namespace {

void require_oracle_size(SpinMagnitude s) {
    if (s.two_s() > kOracleMaxTwoS) {
        throw ResourceError("oracle limited to 2S <= " + std::to_string(kOracleMaxTwoS) + ", got 2S=" +
                            std::to_string(s.two_s()));
    }
}

}  // namespace

DenseHamiltonian::DenseHamiltonian(const SystemConfig &cfg) : s_(cfg.spin()) {
    require_oracle_size(s_);
    const int d = s_.dim();
    const double j_over_s = cfg.coupling() / s_.value();
    diag_.resize(static_cast<size_t>(d) * d);
    for (int k1 = 0; k1 < d; k1++) {
        for (int k2 = 0; k2 < d; k2++) {
            diag_[static_cast<size_t>(k1) * d + k2] = -j_over_s * s_.projection(k1) * s_.projection(k2);
        }
    }
}

JointState oracle_evolve(const SingleSpinState &psi1, const SingleSpinState &psi2, double t,
                         const SystemConfig &cfg) {
    if (psi1.spin() != cfg.spin() || psi2.spin() != cfg.spin()) {
        throw std::domain_error("oracle_evolve: mismatched spin magnitudes");
    }
    DenseHamiltonian h(cfg);
    const int d = cfg.spin().dim();
    Eigen::VectorXcd amps(static_cast<Eigen::Index>(d) * d);
    const std::complex<double> minus_i(0.0, -1.0);
    for (int k1 = 0; k1 < d; k1++) {
        for (int k2 = 0; k2 < d; k2++) {
            const size_t idx = static_cast<size_t>(k1) * d + k2;
            amps(idx) = std::exp(minus_i * h.diagonal()[idx] * t) * psi1.amplitude(k1) * psi2.amplitude(k2);
        }
    }
    return JointState(cfg.spin(), std::move(amps));
}

double oracle_mean_s1x(const JointState &joint) {
    const SpinMagnitude s = joint.spin();
    require_oracle_size(s);
    const int d = s.dim();
    const OperatorMatrix sx = operator_matrix(s, Axis::X);
    // (S_X (x) I) acts on the first index only.
    std::complex<double> acc = 0.0;
    for (int k2 = 0; k2 < d; k2++) {
        for (int i = 0; i < d; i++) {
            std::complex<double> row = 0.0;
            for (int j = 0; j < d; j++) {
                row += sx(i, j) * joint.amplitude(j, k2);
            }
            acc += std::conj(joint.amplitude(i, k2)) * row;
        }
    }
    return acc.real();
}

double oracle_purity(const JointState &joint) {
    const SpinMagnitude s = joint.spin();
    require_oracle_size(s);
    const int d = s.dim();
    double total = 0.0;
    for (int a = 0; a < d; a++) {
        for (int b = 0; b < d; b++) {
            std::complex<double> rho_ab = 0.0;
            for (int k2 = 0; k2 < d; k2++) {
                rho_ab += joint.amplitude(a, k2) * std::conj(joint.amplitude(b, k2));
            }
            total += std::norm(rho_ab);
        }
    }
    return total;
}

}  // namespace qudit_pair
