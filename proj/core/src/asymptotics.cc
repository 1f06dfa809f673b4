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

#include "qudit_pair/asymptotics.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qudit_pair/state_types.h"

namespace qudit_pair {

namespace {

constexpr int kExactStaticWeightMaxTwoS = 512;

double prefactor(SpinMagnitude s) {
    return (s.two_s() + 1.0) / s.two_s();
}

double smooth_bracket(SpinMagnitude s, double tau) {
    const double a = tau * tau + 1.0;
    const double tail = 1.0 - erf(std::sqrt(a / (4.0 * s.two_s())));
    return 1.0 - tail / std::sqrt(a) - asymptotic_static_weight(s);
}

}  // namespace

double erf(double x) {
    return std::erf(x);
}

void MinimaConfig::validate(SpinMagnitude s) const {
    if (m_max < 2 || m_max > s.two_s()) {
        throw std::domain_error("minima train needs 2 <= m_max <= 2S (m_max=" + std::to_string(m_max) +
                                ", 2S=" + std::to_string(s.two_s()) + ")");
    }
}

double asymptotic_static_weight(SpinMagnitude s) {
    require_positive_spin(s, "asymptotic_static_weight");
    if (s.two_s() <= kExactStaticWeightMaxTwoS) {
        const std::int64_t four_s = 2 * static_cast<std::int64_t>(s.two_s());
        return std::exp(log_binomial(four_s, s.two_s()) - static_cast<double>(four_s) * std::numbers::ln2);
    }
    return 1.0 / std::sqrt(std::numbers::pi * s.two_s());
}

double c2_coherent_asymptotic(SpinMagnitude s, double tau) {
    require_positive_spin(s, "c2_coherent_asymptotic");
    return prefactor(s) * smooth_bracket(s, tau);
}

double minima_train(SpinMagnitude s, double tau, const MinimaConfig &cfg) {
    cfg.validate(s);
    const double two_s = s.two_s();
    // 2 pi S n / M = pi (2S) n / M.
    double total = 0.0;
    for (int m = 2; m <= cfg.m_max; m++) {
        const double width = static_cast<double>(m) * m / two_s;  // M^2 / 2S
        for (int n = 1; n <= m; n++) {
            const double offset = tau - std::numbers::pi * two_s * n / m;
            total += std::exp(-width * (1.0 + offset * offset));
        }
    }
    return 2.0 / std::sqrt(std::numbers::pi * two_s) * total;
}

double c2_coherent_asymptotic_minima(SpinMagnitude s, double tau, const MinimaConfig &cfg) {
    require_positive_spin(s, "c2_coherent_asymptotic_minima");
    return prefactor(s) * (smooth_bracket(s, tau) - minima_train(s, tau, cfg));
}

}  // namespace qudit_pair
