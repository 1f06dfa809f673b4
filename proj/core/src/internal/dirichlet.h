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

#ifndef QUDIT_PAIR_INTERNAL_DIRICHLET_H_
#define QUDIT_PAIR_INTERNAL_DIRICHLET_H_

#include <cmath>
#include <numbers>

namespace qudit_pair::internal {

inline constexpr double kResonanceThreshold = 1e-8;

/// sin(d x) / (d sin x) for integer d >= 1, continuous through x = k pi.
///
/// x is split as k pi + delta with |delta| <= pi/2; both sines are then taken
/// of the same reduced delta, so the ratio stays accurate near resonances
/// where sin(d x) and sin(x) computed separately would both be noise.
inline double dirichlet_ratio(int d, double x) {
    const double delta = std::remainder(x, std::numbers::pi);
    const double k = std::nearbyint((x - delta) / std::numbers::pi);
    // sin(d (k pi + delta)) / sin(k pi + delta) = (-1)^{k (d - 1)} sin(d delta) / sin(delta).
    const bool odd_k = std::fmod(std::abs(k), 2.0) == 1.0;
    const double sign = (odd_k && (d - 1) % 2 == 1) ? -1.0 : 1.0;
    const double sd = std::sin(delta);
    if (std::abs(sd) < kResonanceThreshold) {
        const double dd = static_cast<double>(d) * d;
        const double d2 = delta * delta;
        return sign * (1.0 - (dd - 1.0) * d2 / 6.0 + (dd - 1.0) * (3.0 * dd - 7.0) * d2 * d2 / 360.0);
    }
    return sign * std::sin(d * delta) / (d * sd);
}

}  // namespace qudit_pair::internal

#endif  // QUDIT_PAIR_INTERNAL_DIRICHLET_H_
