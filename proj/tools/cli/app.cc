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

#include "app.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qudit_pair/asymptotics.h"
#include "qudit_pair/entanglement.h"
#include "qudit_pair/evolution.h"
#include "qudit_pair/observables.h"
#include "qudit_pair/oracle.h"
#include "qudit_pair/spin_core.h"
#include "qudit_pair/state_prep.h"
#include "qudit_pair/state_types.h"

namespace qudit_pair::cli {

namespace {

constexpr double kPi = std::numbers::pi;

struct Column {
    std::string name;
    std::function<double(double)> value;  // of tau
};

const char *state_name(StateKind k) {
    return k == StateKind::Coherent ? "coherent" : "uniform";
}

const char *quantity_name(Quantity q) {
    switch (q) {
        case Quantity::F:
            return "f";
        case Quantity::C2:
            return "c2";
        case Quantity::Both:
            return "both";
    }
    return "?";
}

const char *method_name(Method m) {
    switch (m) {
        case Method::Exact:
            return "exact";
        case Method::Closed:
            return "closed";
        case Method::Asymptotic12:
            return "asymptotic12";
        case Method::Asymptotic13:
            return "asymptotic13";
        case Method::All:
            return "all";
    }
    return "?";
}

// "1/2", "1", "9/2", ...
std::string spin_label(int two_s) {
    return two_s % 2 == 0 ? std::to_string(two_s / 2) : std::to_string(two_s) + "/2";
}

SingleSpinState initial_state(StateKind kind, SpinMagnitude s) {
    return kind == StateKind::Coherent ? coherent_x(s) : uniform_state(s);
}

double f_closed(StateKind kind, SpinMagnitude s, double tau) {
    return kind == StateKind::Coherent ? f_coherent(s, tau) : f_uniform(s, tau);
}

// Normalized signal from the brute-force path: <S1x(t)> / <S1x(0)>.
class ExactSignal {
   public:
    ExactSignal(StateKind kind, SpinMagnitude s, double j)
        : cfg_(s, j), psi_(initial_state(kind, s)), mean0_(oracle_mean_s1x(oracle_evolve(psi_, psi_, 0.0, cfg_))) {}

    double operator()(double tau) const {
        return oracle_mean_s1x(oracle_evolve(psi_, psi_, tau / cfg_.coupling(), cfg_)) / mean0_;
    }

   private:
    SystemConfig cfg_;
    SingleSpinState psi_;
    double mean0_;
};

class ExactConcurrence {
   public:
    ExactConcurrence(StateKind kind, SpinMagnitude s, double j) : cfg_(s, j), psi_(initial_state(kind, s)) {}

    double operator()(double tau) const {
        return c_squared(oracle_purity(oracle_evolve(psi_, psi_, tau / cfg_.coupling(), cfg_)),
                         cfg_.spin().dim());
    }

   private:
    SystemConfig cfg_;
    SingleSpinState psi_;
};

void write_table(std::ostream &out, const std::string &comment, const std::vector<Column> &cols, double tau_end,
                 int samples, std::optional<double> j) {
    out << "# " << comment << '\n';
    out << "tau";
    if (j) {
        out << ",t";
    }
    for (const auto &c : cols) {
        out << ',' << c.name;
    }
    out << '\n';
    for (int i = 0; i < samples; i++) {
        // Pin the last sample to tau_end exactly.
        const double tau = i == samples - 1 ? tau_end : tau_end * i / (samples - 1);
        out << format_double(tau);
        if (j) {
            out << ',' << format_double(tau / *j);
        }
        for (const auto &c : cols) {
            out << ',' << format_double(c.value(tau));
        }
        out << '\n';
    }
}

bool wants_f(Quantity q) {
    return q != Quantity::C2;
}
bool wants_c2(Quantity q) {
    return q != Quantity::F;
}

std::vector<Column> sweep_columns(const RunSpec &spec) {
    const SpinMagnitude s(spec.two_s);
    const StateKind kind = spec.state;
    const Method m = spec.method;
    const bool all = m == Method::All;
    const bool exact_ok = spec.two_s <= kOracleMaxTwoS;
    const MinimaConfig minima{spec.m_max};
    const bool minima_ok = spec.m_max <= spec.two_s;
    std::vector<Column> cols;

    if (wants_f(spec.quantity)) {
        if (m == Method::Exact || (all && exact_ok)) {
            cols.push_back({"f_exact", ExactSignal(kind, s, spec.j)});
        }
        if (m == Method::Closed || all) {
            cols.push_back({"f_closed", [kind, s](double tau) { return f_closed(kind, s, tau); }});
        }
        if (m == Method::Asymptotic12 || m == Method::Asymptotic13 || all) {
            if (kind == StateKind::Coherent) {
                cols.push_back({"f_approx", [s](double tau) { return f_gaussian_approx(s, tau); }});
            } else {
                cols.push_back({"f_approx", [](double tau) { return f_sinc_approx(tau); }});
            }
        }
    }
    if (wants_c2(spec.quantity)) {
        if (m == Method::Exact || (all && exact_ok)) {
            cols.push_back({"c2_exact", ExactConcurrence(kind, s, spec.j)});
        }
        if (m == Method::Closed || all) {
            cols.push_back({"c2_closed", [kind, s](double tau) { return c2_closed(kind, s, tau); }});
        }
        if (kind == StateKind::Coherent) {
            if (m == Method::Asymptotic12 || all) {
                cols.push_back({"c2_eq12", [s](double tau) { return c2_coherent_asymptotic(s, tau); }});
            }
            if (m == Method::Asymptotic13 || (all && minima_ok)) {
                cols.push_back(
                    {"c2_eq13", [s, minima](double tau) { return c2_coherent_asymptotic_minima(s, tau, minima); }});
            }
        }
    }
    return cols;
}

}  // namespace

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void validate(const RunSpec &spec) {
    if (spec.two_s < 1) {
        throw UsageError("--two-s must be >= 1");
    }
    if (!(spec.j > 0.0) || !std::isfinite(spec.j)) {
        throw UsageError("--j must be positive and finite");
    }
    if (!(spec.tau_max > 0.0) || !std::isfinite(spec.tau_max)) {
        throw UsageError("--tau-max must be positive and finite");
    }
    if (spec.samples < 2) {
        throw UsageError("--samples must be >= 2");
    }
    if (spec.m_max < 2) {
        throw UsageError("--m-max must be >= 2");
    }
    const bool asymptotic = spec.method == Method::Asymptotic12 || spec.method == Method::Asymptotic13;
    if (asymptotic && spec.state != StateKind::Coherent) {
        throw UsageError(std::string("--method ") + method_name(spec.method) + " requires --state coherent");
    }
    if (spec.method == Method::Asymptotic13 && wants_c2(spec.quantity) && spec.m_max > spec.two_s) {
        throw UsageError("--m-max must not exceed --two-s for asymptotic13");
    }
    if (spec.method == Method::Exact && spec.two_s > kOracleMaxTwoS) {
        throw UsageError("--method exact is limited to --two-s <= " + std::to_string(kOracleMaxTwoS));
    }
    if (!std::isfinite(resolved_tau_max(spec))) {
        throw UsageError("--tau-max overflows");
    }
}

double resolved_tau_max(const RunSpec &spec) {
    return spec.period_units ? spec.tau_max * 2.0 * kPi * spec.two_s : spec.tau_max;
}

void run_sweep(const RunSpec &spec, std::ostream &out) {
    validate(spec);
    const double tau_end = resolved_tau_max(spec);
    std::string comment = "qudit-pair sweep two_s=" + std::to_string(spec.two_s) + " s=" + spin_label(spec.two_s) +
                          " j=" + format_double(spec.j) + " state=" + state_name(spec.state) +
                          " quantity=" + quantity_name(spec.quantity) + " method=" + method_name(spec.method) +
                          " tau_max=" + format_double(tau_end) + " period_units=" + (spec.period_units ? "1" : "0") +
                          " samples=" + std::to_string(spec.samples) + " m_max=" + std::to_string(spec.m_max) +
                          " period_tau=" + format_double(2.0 * kPi * spec.two_s);
    write_table(out, comment, sweep_columns(spec), tau_end, spec.samples, spec.j);
}

Figure parse_figure(const std::string &name) {
    static const std::map<std::string, Figure> kNames = {
        {"fig1a", Figure::Fig1a}, {"fig1b", Figure::Fig1b}, {"fig2a", Figure::Fig2a},
        {"fig2b", Figure::Fig2b}, {"fig3", Figure::Fig3},   {"fig4", Figure::Fig4},
    };
    auto it = kNames.find(name);
    if (it == kNames.end()) {
        throw UsageError("unknown figure '" + name + "' (expected fig1a, fig1b, fig2a, fig2b, fig3 or fig4)");
    }
    return it->second;
}

void run_figure(Figure figure, std::ostream &out, int samples) {
    if (samples < 2) {
        throw UsageError("--samples must be >= 2");
    }
    std::vector<Column> cols;
    std::string name;
    double tau_end = 0.0;
    auto add_f = [&cols](const char *prefix, StateKind kind, int two_s) {
        SpinMagnitude s(two_s);
        cols.push_back({std::string(prefix) + "_S" + spin_label(two_s),
                        [kind, s](double tau) { return f_closed(kind, s, tau); }});
    };
    auto add_c2 = [&cols](const char *prefix, StateKind kind, int two_s) {
        SpinMagnitude s(two_s);
        cols.push_back({std::string(prefix) + "_S" + spin_label(two_s),
                        [kind, s](double tau) { return c2_closed(kind, s, tau); }});
    };

    switch (figure) {
        case Figure::Fig1a:
            name = "fig1a";
            tau_end = 6.0 * kPi;  // one full period of S = 3/2
            for (int two_s : {1, 2, 3}) add_f("f_coh", StateKind::Coherent, two_s);
            for (int two_s : {1, 2, 3}) add_f("f_sup", StateKind::Uniform, two_s);
            break;
        case Figure::Fig1b:
            name = "fig1b";
            tau_end = 10.0;
            for (int two_s : {20, 100, 200}) {
                add_f("f_coh", StateKind::Coherent, two_s);
                SpinMagnitude s(two_s);
                cols.push_back({"f_gauss_S" + spin_label(two_s), [s](double tau) { return f_gaussian_approx(s, tau); }});
            }
            for (int two_s : {20, 100, 200}) add_f("f_sup", StateKind::Uniform, two_s);
            cols.push_back({"f_sinc", [](double tau) { return f_sinc_approx(tau); }});
            break;
        case Figure::Fig2a:
            name = "fig2a";
            tau_end = 6.0 * kPi;
            for (int two_s : {1, 2, 3}) add_c2("c2_coh", StateKind::Coherent, two_s);
            for (int two_s : {1, 2, 3}) add_c2("c2_sup", StateKind::Uniform, two_s);
            break;
        case Figure::Fig2b:
            name = "fig2b";
            tau_end = 9.0 * kPi;  // half period of S = 9/2
            add_c2("c2_coh", StateKind::Coherent, 9);
            add_c2("c2_sup", StateKind::Uniform, 9);
            break;
        case Figure::Fig3: {
            name = "fig3";
            tau_end = 9.0 * kPi;
            SpinMagnitude s(9);
            cols.push_back({"c2_exact", ExactConcurrence(StateKind::Coherent, s, 1.0)});
            cols.push_back({"c2_eq12", [s](double tau) { return c2_coherent_asymptotic(s, tau); }});
            cols.push_back({"c2_eq13", [s](double tau) { return c2_coherent_asymptotic_minima(s, tau); }});
            break;
        }
        case Figure::Fig4:
            name = "fig4";
            tau_end = 10.0;
            for (int two_s : {20, 200, 2000, 20000}) {
                SpinMagnitude s(two_s);
                cols.push_back({"f_gauss_S" + spin_label(two_s), [s](double tau) { return f_gaussian_approx(s, tau); }});
            }
            for (int two_s : {20, 200, 2000, 20000}) {
                SpinMagnitude s(two_s);
                cols.push_back({"c2_eq12_S" + spin_label(two_s), [s](double tau) { return c2_coherent_asymptotic(s, tau); }});
            }
            break;
    }
    std::string comment = "qudit-pair figure name=" + name + " samples=" + std::to_string(samples) +
                          " tau_max=" + format_double(tau_end);
    write_table(out, comment, cols, tau_end, samples, std::nullopt);
}

bool run_verify(const VerifySpec &spec, std::ostream &out) {
    if (spec.max_two_s < 1 || spec.max_two_s > kOracleMaxTwoS) {
        throw UsageError("--two-s for verify must be in [1, " + std::to_string(kOracleMaxTwoS) + "]");
    }
    if (spec.samples < 1) {
        throw UsageError("--samples must be >= 1");
    }
    if (!(spec.tolerance >= 0.0) || !std::isfinite(spec.tolerance)) {
        throw UsageError("--tolerance must be finite and >= 0");
    }

    struct Failure {
        int two_s;
        StateKind kind;
        const char *quantity;
        double tau;
        double error;
    };
    std::optional<Failure> first;
    int checks = 0;
    int failed = 0;

    for (int two_s = 1; two_s <= spec.max_two_s; two_s++) {
        const SpinMagnitude s(two_s);
        const SystemConfig cfg(s);
        for (StateKind kind : {StateKind::Coherent, StateKind::Uniform}) {
            const SingleSpinState psi = initial_state(kind, s);
            const double denom = denom_s1_plus(psi).real();
            const char *names[] = {"state", "s1x", "purity"};
            double worst[3] = {0.0, 0.0, 0.0};
            double worst_tau[3] = {0.0, 0.0, 0.0};
            std::optional<double> first_bad[3];
            for (int i = 0; i < spec.samples; i++) {
                const double tau = cfg.period() * i / spec.samples;  // J = 1, so t = tau
                const JointState ref = oracle_evolve(psi, psi, tau, cfg);
                const JointState fast = evolve_product(psi, psi, tau, cfg);
                const double err[3] = {
                    (ref.amplitudes() - fast.amplitudes()).cwiseAbs().maxCoeff(),
                    std::abs(oracle_mean_s1x(ref) - denom * f_closed(kind, s, tau)),
                    std::abs(oracle_purity(ref) - purity_closed(kind, s, tau)),
                };
                for (int q = 0; q < 3; q++) {
                    if (err[q] > worst[q]) {
                        worst[q] = err[q];
                        worst_tau[q] = tau;
                    }
                    if (!(err[q] <= spec.tolerance) && !first_bad[q]) {
                        first_bad[q] = tau;
                        if (!first) {
                            first = Failure{two_s, kind, names[q], tau, err[q]};
                        }
                    }
                }
            }
            for (int q = 0; q < 3; q++) {
                checks++;
                const bool ok = !first_bad[q];
                failed += ok ? 0 : 1;
                char line[256];
                std::snprintf(line, sizeof line, "%s S=%s state=%s quantity=%s max_abs_err=%.3e at tau=%.6g",
                              ok ? "PASS" : "FAIL", spin_label(two_s).c_str(), state_name(kind), names[q], worst[q],
                              worst_tau[q]);
                out << line << '\n';
            }
        }
    }

    char summary[320];
    if (first) {
        std::snprintf(summary, sizeof summary,
                      "verify: FAILED %d of %d checks (tolerance=%.3e); first failure at S=%s tau=%.17g "
                      "quantity=%s state=%s error=%.3e",
                      failed, checks, spec.tolerance, spin_label(first->two_s).c_str(), first->tau, first->quantity,
                      state_name(first->kind), first->error);
    } else {
        std::snprintf(summary, sizeof summary, "verify: all %d checks passed (tolerance=%.3e, %d samples per period)",
                      checks, spec.tolerance, spec.samples);
    }
    out << summary << '\n';
    return !first;
}

int run_main(int argc, const char *const *argv) {
    CLI::App app{"Simulator for two Ising-coupled spin-S qudits", "qudit-pair"};
    app.require_subcommand(1);

    const std::map<std::string, StateKind> states = {{"coherent", StateKind::Coherent},
                                                     {"uniform", StateKind::Uniform}};
    const std::map<std::string, Quantity> quantities = {
        {"f", Quantity::F}, {"c2", Quantity::C2}, {"both", Quantity::Both}};
    const std::map<std::string, Method> methods = {{"exact", Method::Exact},
                                                   {"closed", Method::Closed},
                                                   {"asymptotic12", Method::Asymptotic12},
                                                   {"asymptotic13", Method::Asymptotic13},
                                                   {"all", Method::All}};

    RunSpec run;
    std::string output;
    auto *sweep = app.add_subcommand("sweep", "Tabulate F and/or C^2 on a uniform tau = J t grid");
    sweep->add_option("--two-s", run.two_s, "Twice the spin, 2S >= 1")->required();
    sweep->add_option("--j", run.j, "Coupling J > 0")->capture_default_str();
    sweep->add_option("--state", run.state, "coherent | uniform")
        ->transform(CLI::CheckedTransformer(states))
        ->default_str("coherent");
    sweep->add_option("--quantity", run.quantity, "f | c2 | both")
        ->transform(CLI::CheckedTransformer(quantities))
        ->default_str("both");
    sweep->add_option("--method", run.method, "exact | closed | asymptotic12 | asymptotic13 | all")
        ->transform(CLI::CheckedTransformer(methods))
        ->default_str("all");
    sweep->add_option("--tau-max", run.tau_max, "Upper end of the tau grid")->capture_default_str();
    sweep->add_flag("--period-units", run.period_units, "Read --tau-max in units of the recurrence period");
    sweep->add_option("--samples", run.samples, "Grid points, >= 2")->capture_default_str();
    sweep->add_option("--m-max", run.m_max, "Largest echo order in the minima train")->capture_default_str();
    sweep->add_option("--output", output, "CSV path (default stdout)");

    std::string figure_name;
    int figure_samples = kDefaultFigureSamples;
    auto *figure = app.add_subcommand("figure", "Regenerate the data behind one figure");
    figure->add_option("name", figure_name, "fig1a | fig1b | fig2a | fig2b | fig3 | fig4")->required();
    figure->add_option("--samples", figure_samples, "Grid points, >= 2")->capture_default_str();
    figure->add_option("--output", output, "CSV path (default stdout)");

    VerifySpec verify_spec;
    auto *verify = app.add_subcommand("verify", "Check closed forms against the brute-force oracle");
    verify->add_option("--two-s", verify_spec.max_two_s, "Check every 2S from 1 to this value")->capture_default_str();
    verify->add_option("--samples", verify_spec.samples, "Grid points per period")->capture_default_str();
    verify->add_option("--tolerance", verify_spec.tolerance, "Absolute tolerance")->capture_default_str();
    verify->add_option("--output", output, "Report path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        // --help exits 0 through here.
        int code = app.exit(e);
        return code == 0 ? kExitSuccess : kExitUsage;
    }

    std::ofstream file;
    if (!output.empty()) {
        file.open(output);
        if (!file) {
            std::cerr << "qudit-pair: cannot open " << output << " for writing\n";
            return kExitUsage;
        }
    }
    std::ostream &out = output.empty() ? std::cout : file;

    try {
        if (*sweep) {
            run_sweep(run, out);
        } else if (*figure) {
            run_figure(parse_figure(figure_name), out, figure_samples);
        } else if (*verify) {
            if (!run_verify(verify_spec, out)) {
                return kExitVerificationFailed;
            }
        }
    } catch (const UsageError &e) {
        std::cerr << "qudit-pair: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error &e) {
        std::cerr << "qudit-pair: " << e.what() << '\n';
        return kExitUsage;
    }
    out.flush();
    return kExitSuccess;
}

}  // namespace qudit_pair::cli
