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

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

#include "gtest/gtest.h"
#include "qudit_pair/entanglement.h"
#include "qudit_pair/evolution.h"
#include "qudit_pair/observables.h"
#include "qudit_pair/state_prep.h"
#include "test_support.h"

using namespace qudit_pair;
using qudit_pair::testing::random_state;
using qudit_pair::testing::uniform_real;

TEST(dense_hamiltonian, diagonal_entries) {
    SpinMagnitude s(3);
    DenseHamiltonian h(SystemConfig(s, 2.0));
    ASSERT_EQ(h.diagonal().size(), 16u);
    // (m, n) = (-3/2, 3/2): -(J/S) m n = -(2 / 1.5)(-2.25) = 3.
    ASSERT_NEAR(h.diagonal()[0 * 4 + 3], 3.0, 1e-15);
    ASSERT_NEAR(h.diagonal()[3 * 4 + 3], -3.0, 1e-15);
}

TEST(oracle_evolve, zero_time_is_tensor_product) {
    SpinMagnitude s(4);
    auto a = random_state(s);
    auto b = random_state(s);
    auto j = oracle_evolve(a, b, 0.0, SystemConfig(s));
    for (int k1 = 0; k1 < s.dim(); k1++) {
        for (int k2 = 0; k2 < s.dim(); k2++) {
            ASSERT_EQ(j.amplitude(k1, k2), a.amplitude(k1) * b.amplitude(k2));
        }
    }
}

TEST(oracle_evolve, agrees_with_evolve_product) {
    for (int trial = 0; trial < 100; trial++) {
        SpinMagnitude s(1 + trial % 10);
        SystemConfig cfg(s, uniform_real(0.2, 3.0));
        auto a = random_state(s);
        auto b = random_state(s);
        double t = uniform_real(-cfg.period(), cfg.period());
        auto oracle = oracle_evolve(a, b, t, cfg);
        auto fast = evolve_product(a, b, t, cfg);
        ASSERT_LE((oracle.amplitudes() - fast.amplitudes()).cwiseAbs().maxCoeff(), 1e-12);
        ASSERT_NEAR(oracle.squared_norm(), 1.0, 1e-12);
    }
}

TEST(oracle_evolve, size_limit) {
    SpinMagnitude s(kOracleMaxTwoS + 1);
    auto c = coherent_x(s);
    ASSERT_THROW(oracle_evolve(c, c, 0.1, SystemConfig(s)), ResourceError);
    ASSERT_NO_THROW(oracle_evolve(coherent_x(SpinMagnitude(kOracleMaxTwoS)), coherent_x(SpinMagnitude(kOracleMaxTwoS)),
                                  0.1, SystemConfig(SpinMagnitude(kOracleMaxTwoS))));
}

TEST(oracle_mean_s1x, examples) {
    for (int two_s = 1; two_s <= 10; two_s++) {
        SpinMagnitude s(two_s);
        SystemConfig cfg(s);
        auto c = coherent_x(s);
        auto g = ground_state(s);
        ASSERT_NEAR(oracle_mean_s1x(oracle_evolve(c, c, 0.0, cfg)), s.value(), 1e-10);
        for (double tau : {0.0, 0.4, 3.3, 17.0}) {
            ASSERT_NEAR(oracle_mean_s1x(oracle_evolve(g, g, tau, cfg)), 0.0, 1e-15);
        }
    }
}

TEST(oracle_mean_s1x, matches_closed_form_on_grid) {
    for (int two_s = 1; two_s <= 10; two_s++) {
        SpinMagnitude s(two_s);
        SystemConfig cfg(s);
        auto c = coherent_x(s);
        auto u = uniform_state(s);
        for (int i = 0; i < 200; i++) {
            double tau = cfg.period() * i / 200;
            ASSERT_NEAR(oracle_mean_s1x(oracle_evolve(c, c, tau, cfg)), mean_s1x(c, c, tau), 1e-10);
            ASSERT_NEAR(oracle_mean_s1x(oracle_evolve(u, u, tau, cfg)), mean_s1x(u, u, tau), 1e-10);
        }
    }
}

TEST(oracle_purity, examples) {
    SpinMagnitude half(1);
    auto c = coherent_x(half);
    ASSERT_NEAR(oracle_purity(product_state(c, random_state(half))), 1.0, 1e-12);
    double p = oracle_purity(oracle_evolve(c, c, std::numbers::pi / 4, SystemConfig(half)));
    ASSERT_NEAR(p, 0.75, 1e-12);
    ASSERT_NEAR(c_squared(p, 2), 0.5, 1e-12);
}

TEST(oracle, does_not_include_closed_form_modules) {
    std::ifstream in(QUDIT_PAIR_ORACLE_SOURCE);
    ASSERT_TRUE(in.good()) << QUDIT_PAIR_ORACLE_SOURCE;
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string src = buf.str();
    for (const char *forbidden : {"state_prep.h", "evolution.h", "observables.h", "entanglement.h", "asymptotics.h",
                                  "internal/"}) {
        ASSERT_EQ(src.find(forbidden), std::string::npos) << "oracle.cc includes " << forbidden;
    }
}
