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

#include "qudit_pair/entanglement.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "internal/dirichlet.h"

namespace qudit_pair {

namespace {

constexpr double kPuritySlack = 1e-9;
constexpr int kSortedSumMinTwoS = 200;  // S > 100

using RowMajorMatrixXcd = Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

}  // namespace

ReducedDensity::ReducedDensity(SpinMagnitude s, Eigen::MatrixXcd rho) : s_(s), rho_(std::move(rho)) {
    if (rho_.rows() != s_.dim() || rho_.cols() != s_.dim()) {
        throw std::domain_error("reduced density must be d x d");
    }
    if ((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() > kNormTolerance) {
        throw std::domain_error("reduced density must be Hermitian");
    }
    if (std::abs(rho_.trace() - 1.0) > kNormTolerance) {
        throw std::domain_error("reduced density must have unit trace");
    }
}

ReducedDensity reduced_density(const JointState &joint) {
    if (!(std::abs(joint.squared_norm() - 1.0) <= kNormTolerance)) {
        throw std::domain_error("reduced_density: joint state is not normalized (norm^2=" +
                                std::to_string(joint.squared_norm()) + ")");
    }
    const int d = joint.spin().dim();
    Eigen::Map<const RowMajorMatrixXcd> a(joint.amplitudes().data(), d, d);
    Eigen::MatrixXcd rho = a * a.adjoint();
    // Exact Hermitian symmetry.
    rho = (0.5 * (rho + rho.adjoint())).eval();
    return ReducedDensity(joint.spin(), std::move(rho));
}

double purity(const ReducedDensity &rho) {
    return rho.matrix().squaredNorm();
}

double c_squared(double purity_value, int d) {
    if (d < 2) {
        throw std::domain_error("c_squared: needs d >= 2");
    }
    const double lo = 1.0 / d;
    if (!(purity_value >= lo - kPuritySlack && purity_value <= 1.0 + kPuritySlack)) {
        throw std::domain_error("c_squared: purity " + std::to_string(purity_value) + " outside [1/d, 1]");
    }
    double c2 = static_cast<double>(d) / (d - 1) * (1.0 - purity_value);
    return std::clamp(c2, 0.0, 1.0);
}

double purity_coherent_closed(SpinMagnitude s, double tau) {
    require_positive_spin(s, "purity_coherent_closed");
    const int two_s = s.two_s();
    const std::int64_t four_s = 2 * static_cast<std::int64_t>(two_s);

    // Weights 2^{-4S} C(4S, 2S+M), counted twice for M != 0. They sum to 1
    // exactly (Vandermonde), so normalizing by their computed sum removes the
    // shared rounding of the large log-gamma terms and keeps the purity <= 1.
    const double log_peak = log_binomial(four_s, two_s);
    std::vector<double> terms;
    terms.reserve(two_s + 1);
    CompensatedSum norm;
    for (int m = 0; m <= two_s; m++) {
        const double log_weight = log_binomial(four_s, two_s + m) - log_peak + (m > 0 ? std::numbers::ln2 : 0.0);
        norm.add(std::exp(log_weight));
        double c = std::cos(m * tau / two_s);
        if (c == 0.0) {
            continue;
        }
        // The exponent 4S is even, so every term is non-negative.
        terms.push_back(std::exp(log_weight + static_cast<double>(four_s) * std::log(std::abs(c))));
    }
    if (two_s > kSortedSumMinTwoS) {
        std::sort(terms.begin(), terms.end(), std::greater<>());
    }
    CompensatedSum total;
    for (double t : terms) {
        total.add(t);
    }
    return total.value() / norm.value();
}

double purity_uniform_closed(SpinMagnitude s, double tau) {
    require_positive_spin(s, "purity_uniform_closed");
    const int d = s.dim();
    // (1 - cos(2 d y)) / (1 - cos(2 y)) = d^2 D(y)^2 with y = M tau / 2S and D
    // the normalized Dirichlet ratio, so each summand is (d - M) d^2 D^2.
    CompensatedSum total;
    for (int m = 1; m < d; m++) {
        double r = internal::dirichlet_ratio(d, m * tau / s.two_s());
        total.add(static_cast<double>(d - m) * r * r);
    }
    return 1.0 / d + 2.0 / (static_cast<double>(d) * d) * total.value();
}

double purity_closed(StateKind kind, SpinMagnitude s, double tau) {
    return kind == StateKind::Coherent ? purity_coherent_closed(s, tau) : purity_uniform_closed(s, tau);
}

double c2_closed(StateKind kind, SpinMagnitude s, double tau) {
    return c_squared(purity_closed(kind, s, tau), s.dim());
}

double small_time_coefficient(StateKind kind, SpinMagnitude s) {
    require_positive_spin(s, "small_time_coefficient");
    const double spin = s.value();
    if (kind == StateKind::Coherent) {
        return (2.0 * spin + 1.0) / (4.0 * spin);
    }
    const double d = s.dim();
    return (d + 1.0) * d * d * d / (144.0 * spin * spin);
}

double time_average(StateKind kind, SpinMagnitude s) {
    require_positive_spin(s, "time_average");
    if (kind == StateKind::Coherent) {
        const double q = coherent_static_weight(s);
        return (s.two_s() + 1.0) / s.two_s() * (1.0 - q) * (1.0 - q);
    }
    return 1.0 - 1.0 / s.dim();
}

double coherent_static_weight(SpinMagnitude s) {
    const std::int64_t four_s = 2 * static_cast<std::int64_t>(s.two_s());
    return std::exp(log_binomial(four_s, s.two_s()) - static_cast<double>(four_s) * std::numbers::ln2);
}

double coherent_static_weight_stirling(SpinMagnitude s) {
    require_positive_spin(s, "coherent_static_weight_stirling");
    return 1.0 / std::sqrt(2.0 * std::numbers::pi * s.value());
}

}  // namespace qudit_pair
