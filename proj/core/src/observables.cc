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

#include "qudit_pair/observables.h"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "internal/dirichlet.h"

namespace qudit_pair {

SpectralWeights::SpectralWeights(SpinMagnitude s, std::vector<double> weights)
    : s_(s), weights_(std::move(weights)) {
    if (weights_.size() != static_cast<size_t>(s_.dim())) {
        throw std::domain_error("spectral weights need d=" + std::to_string(s_.dim()) + " entries");
    }
    CompensatedSum total;
    for (double w : weights_) {
        if (!(w >= 0.0)) {
            throw std::domain_error("spectral weights must be non-negative");
        }
        total.add(w);
    }
    if (!(std::abs(total.value() - 1.0) <= kNormTolerance)) {
        throw std::domain_error("spectral weights must sum to 1");
    }
}

SpectralWeights SpectralWeights::of(const SingleSpinState &psi) {
    std::vector<double> w(psi.spin().dim());
    for (int k = 0; k < psi.spin().dim(); k++) {
        w[k] = std::norm(psi.amplitude(k));
    }
    return SpectralWeights(psi.spin(), std::move(w));
}

std::complex<double> f_general(const SpectralWeights &w, double tau) {
    const SpinMagnitude s = w.spin();
    require_positive_spin(s, "f_general");
    // tau n / S = tau (2n) / (2S).
    const double rate = tau / s.two_s();
    std::complex<double> acc = 0.0;
    double total = 0.0;
    for (int k = 0; k < s.dim(); k++) {
        acc += w.weights()[k] * std::polar(1.0, rate * s.twice_projection(k));
        total += w.weights()[k];
    }
    // Dividing by the accumulated total makes F(0) = 1 bit-exactly.
    return acc / total;
}

std::complex<double> denom_s1_plus(const SingleSpinState &psi) {
    const SpinMagnitude s = psi.spin();
    std::complex<double> acc = 0.0;
    for (int k = 1; k < s.dim(); k++) {
        acc += std::conj(psi.amplitude(k)) * psi.amplitude(k - 1) *
               ladder_element(s, Projection::from_twice(s.twice_projection(k)));
    }
    return acc;
}

double mean_s1x(const SingleSpinState &psi1, const SingleSpinState &psi2, double tau) {
    if (psi1.spin() != psi2.spin()) {
        throw std::domain_error("mean_s1x: mismatched spin magnitudes");
    }
    return std::real(std::conj(f_general(SpectralWeights::of(psi2), tau)) * denom_s1_plus(psi1));
}

double f_coherent(SpinMagnitude s, double tau) {
    require_positive_spin(s, "f_coherent");
    return signed_cos_pow(tau / s.two_s(), s.two_s());
}

double f_uniform(SpinMagnitude s, double tau) {
    require_positive_spin(s, "f_uniform");
    return internal::dirichlet_ratio(s.dim(), tau / s.two_s());
}

double f_gaussian_approx(SpinMagnitude s, double tau) {
    require_positive_spin(s, "f_gaussian_approx");
    return std::exp(-tau * tau / (2.0 * s.two_s()));
}

double f_sinc_approx(double tau) {
    if (std::abs(tau) < internal::kResonanceThreshold) {
        return 1.0 - tau * tau / 6.0;
    }
    return std::sin(tau) / tau;
}

}  // namespace qudit_pair
