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

#ifndef QUDIT_PAIR_SPIN_CORE_H_
#define QUDIT_PAIR_SPIN_CORE_H_

#include <cstdint>
#include <limits>

#include <Eigen/Dense>

namespace qudit_pair {

/// Spin magnitude S, stored exactly as the integer 2S.
///
/// Basis states are indexed by k = m + S in {0, ..., 2S}, ascending in the
/// Z projection m. Every module (including the brute-force oracle) uses this
/// ordering.
class SpinMagnitude {
   public:
    explicit SpinMagnitude(int two_s);

    /// Spin from a (half-)integer value; throws if 2S is not a non-negative integer.
    static SpinMagnitude from_value(double s);

    int two_s() const {
        return two_s_;
    }
    /// Hilbert-space dimension d = 2S + 1.
    int dim() const {
        return two_s_ + 1;
    }
    double value() const {
        return 0.5 * two_s_;
    }

    /// 2m for basis index k.
    int twice_projection(int k) const {
        return 2 * k - two_s_;
    }
    double projection(int k) const {
        return k - value();
    }

    bool operator==(const SpinMagnitude &other) const = default;

   private:
    int two_s_;
};

/// Z projection m, stored exactly as 2m.
class Projection {
   public:
    static Projection from_twice(int twice_m) {
        return Projection(twice_m);
    }
    /// Throws std::domain_error if 2m is not an integer.
    static Projection from_value(double m);

    int twice() const {
        return twice_;
    }
    double value() const {
        return 0.5 * twice_;
    }

   private:
    explicit Projection(int twice_m) : twice_(twice_m) {
    }
    int twice_;
};

using OperatorMatrix = Eigen::MatrixXcd;

enum class Axis { X, Y, Z, Plus, Minus };

/// <m|S+|m-1> = sqrt((S - m + 1)(S + m)). Requires m in {-S+1, ..., S}.
double ladder_element(SpinMagnitude s, Projection m);

/// Spin operator matrix in the k = m + S ordering. S+ has its ladder elements
/// on the superdiagonal (row k, column k - 1).
OperatorMatrix operator_matrix(SpinMagnitude s, Axis axis);

/// ln C(n, k). Returns -infinity when k is outside [0, n].
double log_binomial(std::int64_t n, std::int64_t k);

/// cos(x)^p evaluated as sign^p * exp(p ln|cos x|), so large p neither
/// overflows nor loses the sign of odd powers.
double signed_cos_pow(double x, std::int64_t p);

/// Compensated (Neumaier) running sum.
class CompensatedSum {
   public:
    void add(double x);
    double value() const {
        return sum_ + compensation_;
    }

   private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

inline constexpr double kNegativeInfinity = -std::numeric_limits<double>::infinity();

}  // namespace qudit_pair

#endif  // QUDIT_PAIR_SPIN_CORE_H_
