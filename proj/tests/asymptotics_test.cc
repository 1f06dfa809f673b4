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

#include "gtest/gtest.h"
#include "qudit_pair/entanglement.h"
#include "qudit_pair/oracle.h"
#include "qudit_pair/state_prep.h"
#include "test_support.h"

using namespace qudit_pair;

namespace {

constexpr double kPi = std::numbers::pi;

// Measured once against the brute-force oracle at S = 9/2 on tau in [0, 5]
// (501 samples): 0.02808951. Frozen with a little headroom.
constexpr double kSmoothGapBoundNineHalves = 0.0281;

double exact_coherent_c2(SpinMagnitude s, double tau) {
    return c2_closed(StateKind::Coherent, s, tau);
}

double max_smooth_gap(SpinMagnitude s) {
    double gap = 0.0;
    for (int i = 0; i <= 500; i++) {
        double tau = 5.0 * i / 500;
        gap = std::max(gap, std::abs(c2_coherent_asymptotic(s, tau) - exact_coherent_c2(s, tau)));
    }
    return gap;
}

}  // namespace

TEST(erf, examples) {
    ASSERT_EQ(qudit_pair::erf(0.0), 0.0);
    ASSERT_NEAR(qudit_pair::erf(1.0), 0.8427007929497149, 1e-15);
    ASSERT_GT(qudit_pair::erf(7.0), 1.0 - 1e-12);
    ASSERT_LE(qudit_pair::erf(7.0), 1.0);
}

TEST(erf, matches_series_oracle) {
    ASSERT_NEAR(qudit_pair::testing::series_erf(1.0), 0.8427007929497149, 1e-15);
    for (int i = -6000; i <= 6000; i++) {
        double x = i / 1000.0;
        ASSERT_NEAR(qudit_pair::erf(x), qudit_pair::testing::series_erf(x), 1e-12) << "x=" << x;
    }
}

TEST(erf, odd_and_monotone) {
    double prev = -2.0;
    for (int i = -3000; i <= 3000; i++) {
        double x = i / 500.0;
        ASSERT_EQ(qudit_pair::erf(-x), -qudit_pair::erf(x));
        double v = qudit_pair::erf(x);
        ASSERT_GE(v, prev);
        prev = v;
    }
}

TEST(minima_config, validation) {
    MinimaConfig cfg;
    ASSERT_EQ(cfg.m_max, 4);
    ASSERT_NO_THROW(cfg.validate(SpinMagnitude(9)));
    ASSERT_THROW(cfg.validate(SpinMagnitude(3)), std::domain_error);
    ASSERT_THROW(MinimaConfig{1}.validate(SpinMagnitude(9)), std::domain_error);
}

TEST(asymptotic_static_weight, switches_to_stirling_above_512) {
    ASSERT_EQ(asymptotic_static_weight(SpinMagnitude(512)), coherent_static_weight(SpinMagnitude(512)));
    ASSERT_EQ(asymptotic_static_weight(SpinMagnitude(513)), coherent_static_weight_stirling(SpinMagnitude(513)));
}

TEST(c2_coherent_asymptotic, nearly_zero_at_origin) {
    for (int two_s = 2; two_s <= 200; two_s++) {
        SpinMagnitude s(two_s);
        ASSERT_LE(std::abs(c2_coherent_asymptotic(s, 0.0)), 2.0 / std::sqrt(2 * kPi * s.value())) << two_s;
    }
}

TEST(c2_coherent_asymptotic, tracks_exact_curve_at_nine_halves) {
    SpinMagnitude s(9);
    SystemConfig cfg(s);
    auto c = coherent_x(s);
    double gap = 0.0;
    for (int i = 0; i <= 500; i++) {
        double tau = 5.0 * i / 500;
        double oracle = c_squared(oracle_purity(oracle_evolve(c, c, tau, cfg)), s.dim());
        gap = std::max(gap, std::abs(c2_coherent_asymptotic(s, tau) - oracle));
    }
    ASSERT_LE(gap, kSmoothGapBoundNineHalves);
}

TEST(c2_coherent_asymptotic, saturates_from_below) {
    SpinMagnitude s(20000);
    const double limit = (s.two_s() + 1.0) / s.two_s() * (1.0 - asymptotic_static_weight(s));
    double prev = 0.0;
    for (double tau : {10.0, 100.0, 1000.0}) {
        double v = c2_coherent_asymptotic(s, tau);
        ASSERT_LT(v, limit);
        ASSERT_GT(v, prev);
        prev = v;
    }
    ASSERT_NEAR(prev, limit, 1e-3);
    // erf saturates to 1 in double precision here, so only <= holds.
    ASSERT_LE(c2_coherent_asymptotic(s, 10000.0), limit);
}

TEST(c2_coherent_asymptotic, accuracy_improves_with_spin) {
    double prev = 1.0;
    for (int two_s : {9, 19, 49, 99}) {
        double gap = max_smooth_gap(SpinMagnitude(two_s));
        ASSERT_LT(gap, prev) << "2S=" << two_s;
        prev = gap;
    }
}

TEST(c2_coherent_asymptotic_minima, equals_smooth_curve_away_from_echoes) {
    SpinMagnitude s(9);
    for (int i = 0; i <= 50; i++) {
        double tau = 0.5 * i / 50;
        ASSERT_LT(minima_train(s, tau, {}), 1e-12);
        ASSERT_NEAR(c2_coherent_asymptotic_minima(s, tau), c2_coherent_asymptotic(s, tau), 1e-12);
    }
}

TEST(c2_coherent_asymptotic_minima, never_above_smooth_curve) {
    for (int two_s : {4, 9, 19, 49}) {
        SpinMagnitude s(two_s);
        const double half_period = 2 * kPi * s.value();
        for (int i = 0; i <= 1000; i++) {
            double tau = half_period * i / 1000;
            ASSERT_LE(c2_coherent_asymptotic_minima(s, tau), c2_coherent_asymptotic(s, tau));
        }
    }
}

TEST(c2_coherent_asymptotic_minima, dips_at_quarter_period) {
    SpinMagnitude s(9);
    const double quarter = kPi * s.value();  // T J / 4
    double smooth = c2_coherent_asymptotic(s, quarter);
    double dipped = c2_coherent_asymptotic_minima(s, quarter);
    ASSERT_LT(dipped, smooth - 0.05);
    // Local minimum of the train-corrected curve.
    ASSERT_LT(dipped, c2_coherent_asymptotic_minima(s, quarter - 0.3));
    ASSERT_LT(dipped, c2_coherent_asymptotic_minima(s, quarter + 0.3));
    // The exact curve dips there too.
    ASSERT_LT(exact_coherent_c2(s, quarter), exact_coherent_c2(s, quarter - 0.3));
    ASSERT_LT(exact_coherent_c2(s, quarter), exact_coherent_c2(s, quarter + 0.3));
}

TEST(c2_coherent_asymptotic_minima, dips_shrink_with_spin) {
    auto depth = [](SpinMagnitude s) {
        double quarter = kPi * s.value();
        return c2_coherent_asymptotic(s, quarter) - c2_coherent_asymptotic_minima(s, quarter);
    };
    ASSERT_LT(depth(SpinMagnitude(49)), depth(SpinMagnitude(9)));
    ASSERT_LT(depth(SpinMagnitude(199)), depth(SpinMagnitude(49)));
}

TEST(gaussian_replacement, cosine_power_matches_gaussian_at_large_spin) {
    SpinMagnitude s(200);
    for (int m = 1; m <= 4; m++) {
        for (int i = 0; i <= 200; i++) {
            double tau = 2.0 * i / 200;
            double cos_pow = signed_cos_pow(m * tau / s.two_s(), 2 * s.two_s());
            double gauss = std::exp(-m * m * tau * tau / s.two_s());
            ASSERT_LT(std::abs(cos_pow - gauss), 0.01);
        }
    }
}
