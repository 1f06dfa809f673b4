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

#include "qudit_pair/spin_core.h"

#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qudit_pair {

namespace {

// C(62, 31) < 2^64, and the gcd-reduced update never exceeds the final value.
constexpr std::int64_t kExactBinomialLimit = 62;

double exact_binomial(std::int64_t n, std::int64_t k) {
    std::uint64_t r = 1;
    for (std::int64_t i = 1; i <= k; i++) {
        // r * (n - k + i) / i, exact at every step.
        std::uint64_t g = std::gcd(r, static_cast<std::uint64_t>(i));
        r = (r / g) * (static_cast<std::uint64_t>(n - k + i) / (static_cast<std::uint64_t>(i) / g));
    }
    return static_cast<double>(r);
}

}  // namespace

SpinMagnitude::SpinMagnitude(int two_s) : two_s_(two_s) {
    if (two_s < 0) {
        throw std::domain_error("spin magnitude must satisfy 2S >= 0, got 2S=" + std::to_string(two_s));
    }
}

SpinMagnitude SpinMagnitude::from_value(double s) {
    double twice = 2.0 * s;
    if (!std::isfinite(twice) || twice < 0 || twice != std::floor(twice) ||
        twice > std::numeric_limits<int>::max()) {
        throw std::domain_error("spin magnitude must be a non-negative multiple of 1/2");
    }
    return SpinMagnitude(static_cast<int>(twice));
}

Projection Projection::from_value(double m) {
    double twice = 2.0 * m;
    if (!std::isfinite(twice) || twice != std::floor(twice) || std::abs(twice) > std::numeric_limits<int>::max()) {
        throw std::domain_error("projection must be a multiple of 1/2");
    }
    return Projection(static_cast<int>(twice));
}

double ladder_element(SpinMagnitude s, Projection m) {
    // Valid m: -S+1 <= m <= S with m - S integral.
    int two_m = m.twice();
    if (two_m > s.two_s() || two_m < 2 - s.two_s() || (two_m + s.two_s()) % 2 != 0) {
        throw std::domain_error("ladder_element: m=" + std::to_string(m.value()) + " out of range for S=" +
                                std::to_string(s.value()));
    }
    // (S - m + 1)(S + m) = (2S - 2m + 2)(2S + 2m) / 4.
    double a = s.two_s() - two_m + 2;
    double b = s.two_s() + two_m;
    return 0.5 * std::sqrt(a * b);
}

OperatorMatrix operator_matrix(SpinMagnitude s, Axis axis) {
    const int d = s.dim();
    OperatorMatrix plus = OperatorMatrix::Zero(d, d);
    for (int k = 1; k < d; k++) {
        plus(k, k - 1) = ladder_element(s, Projection::from_twice(s.twice_projection(k)));
    }
    switch (axis) {
        case Axis::Z: {
            OperatorMatrix z = OperatorMatrix::Zero(d, d);
            for (int k = 0; k < d; k++) {
                z(k, k) = s.projection(k);
            }
            return z;
        }
        case Axis::Plus:
            return plus;
        case Axis::Minus:
            return plus.adjoint();
        case Axis::X:
            return (plus + plus.adjoint()) * 0.5;
        case Axis::Y:
            // S_Y = (S+ - S-) / 2i.
            return (plus - plus.adjoint()) * std::complex<double>(0.0, -0.5);
    }
    throw std::logic_error("operator_matrix: unknown axis");
}

double log_binomial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) {
        return kNegativeInfinity;
    }
    if (k > n - k) {
        k = n - k;
    }
    if (k == 0) {
        return 0.0;
    }
    if (n <= kExactBinomialLimit) {
        return std::log(exact_binomial(n, k));
    }
    double nd = static_cast<double>(n);
    double kd = static_cast<double>(k);
    return std::lgamma(nd + 1.0) - std::lgamma(kd + 1.0) - std::lgamma(nd - kd + 1.0);
}

double signed_cos_pow(double x, std::int64_t p) {
    if (p <= 0) {
        return 1.0;
    }
    double c = std::cos(x);
    if (c == 0.0) {
        return 0.0;
    }
    double magnitude = std::exp(static_cast<double>(p) * std::log(std::abs(c)));
    return (c < 0 && (p % 2) == 1) ? -magnitude : magnitude;
}

void CompensatedSum::add(double x) {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
        compensation_ += (sum_ - t) + x;
    } else {
        compensation_ += (x - t) + sum_;
    }
    sum_ = t;
}

}  // namespace qudit_pair
