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

// Normalized transverse-spin signal F(tau), tau = J t.
//
// For a product initial state, <S1+(t)> = <S1+(0)> * sum_n |C_n|^2 e^{-i tau n/S},
// where C_n are the amplitudes of spin 2. The signal therefore depends only on
// spin 2's Z-level populations (the "spectral weights") and on one
// coherence factor of spin 1.

#ifndef QUDIT_PAIR_OBSERVABLES_H_
#define QUDIT_PAIR_OBSERVABLES_H_

#include <complex>
#include <vector>

#include "qudit_pair/state_types.h"

namespace qudit_pair {

/// Z-level populations |C_n|^2 in k order. Non-negative and summing to 1.
class SpectralWeights {
   public:
    /// Throws std::domain_error on negative entries, wrong length, or a sum
    /// differing from 1 by more than kNormTolerance.
    SpectralWeights(SpinMagnitude s, std::vector<double> weights);

    static SpectralWeights of(const SingleSpinState &psi);

    SpinMagnitude spin() const {
        return s_;
    }
    const std::vector<double> &weights() const {
        return weights_;
    }

   private:
    SpinMagnitude s_;
    std::vector<double> weights_;
};

/// F(tau) = sum_n |C_n|^2 exp(i tau n / S). Returns exactly 1 at tau = 0.
std::complex<double> f_general(const SpectralWeights &w, double tau);

/// <psi|S+|psi> = sum_m C*_m C_{m-1} sqrt((S-m+1)(S+m)).
std::complex<double> denom_s1_plus(const SingleSpinState &psi);

/// <S1x(tau)> for the product initial state psi1 (x) psi2. Spin 2 supplies the
/// dephasing spectrum. Uses conj(F), which is what the evolution sign
/// convention produces; for symmetric populations F is real and the two agree.
double mean_s1x(const SingleSpinState &psi1, const SingleSpinState &psi2, double tau);

/// (cos(tau / 2S))^{2S}.
double f_coherent(SpinMagnitude s, double tau);

/// sin(tau (1 + 1/2S)) / ((2S+1) sin(tau / 2S)), continuous through the
/// resonances tau = 2 pi S k.
double f_uniform(SpinMagnitude s, double tau);

/// exp(-tau^2 / 4S), the short-time large-S form of f_coherent.
double f_gaussian_approx(SpinMagnitude s, double tau);

/// sin(tau) / tau, the large-S form of f_uniform; 1 at tau = 0.
double f_sinc_approx(double tau);

}  // namespace qudit_pair

#endif  // QUDIT_PAIR_OBSERVABLES_H_
