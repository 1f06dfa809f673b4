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

#include "qudit_pair/state_prep.h"

#include <cmath>
#include <complex>
#include <numbers>

#include <Eigen/Eigenvalues>

namespace qudit_pair {

SingleSpinState ground_state(SpinMagnitude s) {
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(s.dim());
    amps(s.two_s()) = 1.0;
    return SingleSpinState(s, std::move(amps));
}

SingleSpinState coherent_x(SpinMagnitude s) {
    const int two_s = s.two_s();
    const double log_scale = -0.5 * two_s * std::numbers::ln2;
    Eigen::VectorXcd amps(s.dim());
    for (int k = 0; k <= two_s; k++) {
        // S + m = k.
        amps(k) = std::exp(0.5 * log_binomial(two_s, k) + log_scale);
    }
    return SingleSpinState(s, std::move(amps));
}

SingleSpinState uniform_state(SpinMagnitude s) {
    Eigen::VectorXcd amps = Eigen::VectorXcd::Constant(s.dim(), 1.0 / std::sqrt(static_cast<double>(s.dim())));
    return SingleSpinState(s, std::move(amps));
}

SingleSpinState rotate_y(const SingleSpinState &state, double theta) {
    const SpinMagnitude s = state.spin();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(operator_matrix(s, Axis::Y));
    const Eigen::MatrixXcd &v = solver.eigenvectors();
    Eigen::VectorXcd phases(s.dim());
    for (int i = 0; i < s.dim(); i++) {
        phases(i) = std::polar(1.0, -theta * solver.eigenvalues()(i));
    }
    Eigen::VectorXcd out = v * phases.asDiagonal() * (v.adjoint() * state.amplitudes());
    return SingleSpinState(s, std::move(out));
}

SingleSpinState qft(const SingleSpinState &state) {
    const int d = state.spin().dim();
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(d);
    for (int j = 0; j < d; j++) {
        std::complex<double> acc = 0.0;
        for (int k = 0; k < d; k++) {
            // Reduce j*k mod d before scaling so the phase stays exact for large d.
            long long jk = (static_cast<long long>(j) * k) % d;
            acc += std::polar(scale, 2.0 * std::numbers::pi * static_cast<double>(jk) / d) * state.amplitude(k);
        }
        out(j) = acc;
    }
    return SingleSpinState(state.spin(), std::move(out));
}

bool equal_up_to_global_phase(const Eigen::VectorXcd &a, const Eigen::VectorXcd &b, double tolerance) {
    if (a.size() != b.size()) {
        return false;
    }
    if (a.size() == 0) {
        return true;
    }
    Eigen::Index pivot;
    a.cwiseAbs().maxCoeff(&pivot);
    if (std::abs(b(pivot)) == 0.0) {
        return std::abs(a(pivot)) <= tolerance && (a - b).cwiseAbs().maxCoeff() <= tolerance;
    }
    std::complex<double> pa = a(pivot) / std::abs(a(pivot));
    std::complex<double> pb = b(pivot) / std::abs(b(pivot));
    return ((a / pa) - (b / pb)).cwiseAbs().maxCoeff() <= tolerance;
}

}  // namespace qudit_pair
