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

// Front end of the qudit-pair tool: parameter sweeps, figure data, and the
// closed-form-versus-oracle verification report.
//
// All sweeps use the dimensionless time tau = J t. CSV output starts with one
// "# key=value ..." comment line, then a header row, then one row per sample
// in increasing tau. Numbers are printed with 17 significant digits so every
// value round-trips exactly.

#ifndef QUDIT_PAIR_TOOLS_CLI_APP_H_
#define QUDIT_PAIR_TOOLS_CLI_APP_H_

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "qudit_pair/entanglement.h"

namespace qudit_pair::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Invalid command-line parameters; maps to exit status 2.
class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

enum class Quantity { F, C2, Both };
enum class Method { Exact, Closed, Asymptotic12, Asymptotic13, All };

struct RunSpec {
    int two_s = 1;
    double j = 1.0;
    StateKind state = StateKind::Coherent;
    Quantity quantity = Quantity::Both;
    Method method = Method::All;
    /// Upper end of the tau grid; a multiple of T J = 4 pi S when period_units is set.
    double tau_max = 1.0;
    bool period_units = false;
    int samples = 1000;
    int m_max = 4;
};

/// Throws UsageError describing the first violated constraint.
void validate(const RunSpec &spec);

/// tau_max in units of J t.
double resolved_tau_max(const RunSpec &spec);

void run_sweep(const RunSpec &spec, std::ostream &out);

enum class Figure { Fig1a, Fig1b, Fig2a, Fig2b, Fig3, Fig4 };

/// Throws UsageError for unknown names.
Figure parse_figure(const std::string &name);

inline constexpr int kDefaultFigureSamples = 1000;

void run_figure(Figure figure, std::ostream &out, int samples = kDefaultFigureSamples);

struct VerifySpec {
    int max_two_s = 10;
    int samples = 200;
    double tolerance = 1e-10;
};

/// Compares every closed form against the oracle for 2S = 1..max_two_s.
/// Writes one line per check and returns true iff all pass.
bool run_verify(const VerifySpec &spec, std::ostream &out);

/// "%.17g".
std::string format_double(double v);

/// Full command-line entry point; returns the process exit status.
int run_main(int argc, const char *const *argv);

}  // namespace qudit_pair::cli

#endif  // QUDIT_PAIR_TOOLS_CLI_APP_H_
