// Copyright 2026 The QSTS Authors
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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "oracle_check.hpp"
#include "qsts/cli.hpp"
#include "qsts/efficiency.hpp"
#include "qsts/protocols.hpp"

using namespace qsts;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

bool contains(const std::vector<std::string>& v, const std::string& s) {
    return std::find(v.begin(), v.end(), s) != v.end();
}

const std::vector<double> kGrid{0.3, 0.7, 1.0};

Outcome table1_reproduction() {
    const auto start = Clock::now();
    std::mt19937_64 rng(101);
    std::size_t rows = 0;
    std::size_t failed = 0;
    double worst = 0.0;
    for (const double n : kGrid) {
        for (const double m : kGrid) {
            for (int i = 0; i < 5; ++i) {
                const auto input = haar_sample_generic(rng);
                const auto report = verify_table1(ChannelParameter(Complex{n}), BasisParameter(Complex{m}), input, 1e-10);
                for (const auto& r : report.rows) {
                    ++rows;
                    failed += r.passed ? 0 : 1;
                    worst = std::max(worst, 1.0 - r.fidelity);
                }
            }
        }
    }
    const double t = seconds_since(start);
    return {failed == 0 && rows == 9 * 5 * 8 && t < 1.0,
            std::to_string(rows) + " row checks, " + std::to_string(failed) + " failed, max infidelity " +
                fmt("%.2e", worst) + ", " + fmt("%.3f", t) + " s (limit 1 s)"};
}

Outcome table2_reproduction() {
    const auto start = Clock::now();
    std::mt19937_64 rng(102);
    std::size_t rows = 0;
    std::size_t failed = 0;
    double worst = 0.0;
    for (const double n1 : kGrid) {
        for (const double n2 : kGrid) {
            for (const double m : kGrid) {
                for (int i = 0; i < 5; ++i) {
                    const auto input = haar_sample_generic(rng);
                    const auto report = verify_table2(ChannelParameter(Complex{n1}), ChannelParameter(Complex{n2}),
                                                      BasisParameter(Complex{m}), input, 1e-10);
                    for (const auto& r : report.rows) {
                        ++rows;
                        failed += r.passed ? 0 : 1;
                        worst = std::max(worst, 1.0 - r.fidelity);
                    }
                }
            }
        }
    }
    const double t = seconds_since(start);
    return {failed == 0 && rows == 27 * 5 * 16 && t < 5.0,
            std::to_string(rows) + " row checks, " + std::to_string(failed) + " failed, max infidelity " +
                fmt("%.2e", worst) + ", " + fmt("%.3f", t) + " s (limit 5 s)"};
}

// Ratio |a/b| of the table's final state a*alpha|0> + b*beta|1> for `label`.
double table_ratio(ProtocolKind kind, const std::string& label, const std::vector<Complex>& ch, Complex m) {
    const InputQubit zero(1.0, 0.0);
    const InputQubit one(0.0, 1.0);
    if (kind == ProtocolKind::P1) {
        return std::abs(table1_final_state(label, zero, ch[0], m)[0]) /
               std::abs(table1_final_state(label, one, ch[0], m)[1]);
    }
    return std::abs(table2_final_state(label, zero, ch[0], ch[1], m)[0]) /
           std::abs(table2_final_state(label, one, ch[0], ch[1], m)[1]);
}

// Fidelity of the normalized a*alpha|0> + b*beta|1> with alpha|0> + beta|1>.
double table_fidelity(ProtocolKind kind, const std::string& label, const std::vector<Complex>& ch, Complex m,
                      const InputQubit& input) {
    const auto f = kind == ProtocolKind::P1 ? table1_final_state(label, input, ch[0], m)
                                            : table2_final_state(label, input, ch[0], ch[1], m);
    return fidelity(input.state(), normalize({f[0], f[1]}).first);
}

Outcome unity_strategies() {
    const auto start = Clock::now();
    std::mt19937_64 rng(103);
    std::uniform_real_distribution<double> channel(0.05, 1.0);
    std::size_t targeted = 0;
    std::size_t targeted_bad = 0;
    std::size_t others = 0;
    std::size_t others_bad = 0;
    std::size_t coincident = 0;
    std::size_t coincident_bad = 0;
    double worst_target = 0.0;
    double best_other = 0.0;
    for (const auto kind : {ProtocolKind::P1, ProtocolKind::P2}) {
        for (const auto& s : named_strategies(kind)) {
            const auto targets = s.targets(true);
            for (int c = 0; c < 20; ++c) {
                std::vector<Complex> ch{Complex{1.0 - channel(rng) + 0.05}};
                if (kind == ProtocolKind::P2) {
                    ch.emplace_back(1.0 - channel(rng) + 0.05);
                }
                const auto m = choose_m(s, ch);
                for (int i = 0; i < 100; ++i) {
                    const auto input = haar_sample_generic(rng);
                    const auto run = kind == ProtocolKind::P1
                                         ? run_protocol1(input, ChannelParameter(ch[0]), m)
                                         : run_protocol2(input, ChannelParameter(ch[0]), ChannelParameter(ch[1]), m);
                    for (const auto& b : run.branches) {
                        if (contains(targets, b.alice_label)) {
                            ++targeted;
                            targeted_bad += b.fidelity >= 1.0 - 1e-9 ? 0 : 1;
                            worst_target = std::max(worst_target, 1.0 - b.fidelity);
                        } else if (std::abs(table_ratio(kind, b.alice_label, ch, m.m) - 1.0) <= 0.05) {
                            // The channel makes both table coefficients nearly equal: not generic.
                            ++coincident;
                            const double expected = table_fidelity(kind, b.alice_label, ch, m.m, input);
                            coincident_bad += std::abs(b.fidelity - expected) <= 1e-10 ? 0 : 1;
                        } else {
                            ++others;
                            others_bad += b.fidelity < 1.0 - 1e-6 ? 0 : 1;
                            best_other = std::max(best_other, b.fidelity);
                        }
                    }
                }
            }
        }
    }
    const double t = seconds_since(start);
    return {targeted_bad == 0 && others_bad == 0 && coincident_bad == 0 && t < 10.0,
            std::to_string(targeted) + " targeted branches (" + std::to_string(targeted_bad) +
                " below 1-1e-9, max infidelity " + fmt("%.2e", worst_target) + "), " + std::to_string(others) +
                " generic others (" + std::to_string(others_bad) + " at or above 1-1e-6, max fidelity " +
                fmt("%.9f", best_other) + "), " + std::to_string(coincident) +
                " others with near-equal table coefficients (" + std::to_string(coincident_bad) +
                " off the table prediction), " + fmt("%.2f", t) + " s (limit 10 s)"};
}

Outcome deterministic_limits() {
    std::mt19937_64 rng(104);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const auto input = haar_sample(rng);
        const auto one = run_protocol1(input, ChannelParameter(Complex{1.0}), BasisParameter(Complex{1.0}));
        const auto two = run_protocol2(input, ChannelParameter(Complex{1.0}), ChannelParameter(Complex{1.0}),
                                       BasisParameter(Complex{1.0}));
        for (const auto* run : {&one, &two}) {
            for (const auto& b : run->branches) {
                worst = std::max(worst, std::abs(1.0 - b.fidelity));
            }
            worst = std::max(worst, std::abs(1.0 - run->weighted_fidelity()));
        }
    }
    ProtocolConfig c1{ProtocolKind::P1, {Complex{1.0}}, Complex{1.0}};
    ProtocolConfig c2{ProtocolKind::P2, {Complex{1.0}, Complex{1.0}}, Complex{1.0}};
    const auto e1 = cpro_monte_carlo(c1, 1000, 4);
    const auto e2 = cpro_monte_carlo(c2, 1000, 4);
    worst = std::max({worst, std::abs(1.0 - cpro1_analytic(1.0, 1.0)), std::abs(1.0 - cpro2_analytic(1.0, 1.0, 1.0)),
                      std::abs(1.0 - e1.estimate), std::abs(1.0 - e2.estimate)});
    return {worst <= 1e-12, "max deviation from 1 over branch fidelities and C^pro: " + fmt("%.2e", worst)};
}

Outcome analytic_efficiency() {
    const double d1 = std::abs(cpro1_analytic(0.5, 0.5) - 0.88);
    const double d2 = std::abs(cpro2_analytic(1.0, 1.0, 0.5) - 14.0 / 15.0);
    std::mt19937_64 rng(105);
    std::uniform_real_distribution<double> u(0.0, 2.0);
    bool perm = true;
    for (int i = 0; i < 1000; ++i) {
        const double a = u(rng);
        const double b = u(rng);
        const double c = u(rng);
        const double ref = cpro2_analytic(a, b, c);
        perm = perm && cpro1_analytic(a, b) == cpro1_analytic(b, a) && cpro2_analytic(a, c, b) == ref &&
               cpro2_analytic(b, a, c) == ref && cpro2_analytic(b, c, a) == ref && cpro2_analytic(c, a, b) == ref &&
               cpro2_analytic(c, b, a) == ref;
    }
    bool mono = true;
    const int points = 20;
    for (int i = 1; i <= points; ++i) {
        const double fixed = static_cast<double>(i) / points;
        for (int j = 2; j <= points; ++j) {
            const double lo = static_cast<double>(j - 1) / points;
            const double hi = static_cast<double>(j) / points;
            mono = mono && cpro1_analytic(fixed, hi) >= cpro1_analytic(fixed, lo) &&
                   cpro1_analytic(hi, fixed) >= cpro1_analytic(lo, fixed) &&
                   cpro2_analytic(fixed, 0.6, hi) >= cpro2_analytic(fixed, 0.6, lo) &&
                   cpro2_analytic(hi, fixed, 0.6) >= cpro2_analytic(lo, fixed, 0.6) &&
                   cpro2_analytic(0.6, hi, fixed) >= cpro2_analytic(0.6, lo, fixed);
        }
    }
    return {d1 <= 1e-12 && d2 <= 1e-12 && perm && mono,
            "|C1(0.5,0.5)-0.88| = " + fmt("%.1e", d1) + ", |C2(1,1,0.5)-14/15| = " + fmt("%.1e", d2) +
                ", permutations exact: " + (perm ? "yes" : "no") + ", monotone on 20-point grid: " +
                (mono ? "yes" : "no")};
}

Outcome mc_agreement() {
    const auto start = Clock::now();
    const std::vector<double> grid{0.1, 0.3, 0.5, 0.8, 1.0};
    int agree = 0;
    int exact = 0;
    double worst_z = 0.0;
    std::uint64_t seed = 600;
    for (const double n : grid) {
        for (const double m : grid) {
            ProtocolConfig c{ProtocolKind::P1, {Complex{n}}, Complex{m}};
            const auto r = cpro_monte_carlo_serial(c, 10000, seed++);
            const double diff = std::abs(r.estimate - *r.analytic);
            if (diff <= 1e-12) {
                // Zero-variance cell: the estimate equals the closed form to round-off.
                ++agree;
                ++exact;
                continue;
            }
            const double z = diff / r.std_error;
            agree += z <= 4.0 ? 1 : 0;
            worst_z = std::max(worst_z, z);
        }
    }
    const double t = seconds_since(start);
    return {agree >= 24 && t < 60.0,
            std::to_string(agree) + "/25 cells within 4 standard errors (" + std::to_string(exact) +
                " exact to round-off, largest |z| elsewhere " + fmt("%.2f", worst_z) + "), serial sampler, " + fmt("%.2f", t) + " s (limit 60 s)"};
}

Outcome haar_moments() {
    std::mt19937_64 rng(107);
    MeanAccumulator a2;
    MeanAccumulator a4;
    MeanAccumulator ab;
    for (int i = 0; i < 1000000; ++i) {
        const auto q = haar_sample(rng);
        const double p = std::norm(q.alpha);
        a2.add(p);
        a4.add(p * p);
        ab.add(p * std::norm(q.beta));
    }
    const double z1 = std::abs(a2.mean - 0.5) / a2.std_error();
    const double z2 = std::abs(a4.mean - 1.0 / 3.0) / a4.std_error();
    const double z3 = std::abs(ab.mean - 1.0 / 6.0) / ab.std_error();
    return {z1 < 5 && z2 < 5 && z3 < 5, "10^6 samples, |z| for <|a|^2>, <|a|^4>, <|ab|^2>: " + fmt("%.2f", z1) + ", " +
                                            fmt("%.2f", z2) + ", " + fmt("%.2f", z3) + " (limit 5)"};
}

Outcome protocol_comparison() {
    std::mt19937_64 rng(108);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int holds = 0;
    int equality_ok = 0;
    for (int i = 0; i < 100; ++i) {
        const double n = u(rng);
        const double m = u(rng);
        const double other = u(rng);
        const auto r = compare_protocols(n, m, other);
        holds += r.first_at_least_second ? 1 : 0;
        equality_ok += r.equal == r.equality_expected ? 1 : 0;
    }
    return {holds == 100 && equality_ok == 100,
            "C1 >= C2 in " + std::to_string(holds) + "/100 triples; equality exactly when expected in " +
                std::to_string(equality_ok) + "/100"};
}

Outcome oracle_equivalence() {
    std::mt19937_64 rng(109);
    std::uniform_real_distribution<double> u(-1.3, 1.3);
    double worst_p = 0.0;
    double worst_s = 0.0;
    std::size_t branches = 0;
    for (int i = 0; i < 50; ++i) {
        const auto input = haar_sample(rng);
        const Complex n1{u(rng), u(rng)};
        const Complex n2{u(rng), u(rng)};
        const BasisParameter m(Complex{u(rng), u(rng)});
        const Receiver r = (i % 2 == 0) ? Receiver::charlie() : Receiver::bob();
        for (const auto& run : {run_protocol1(input, ChannelParameter(n1), m, r),
                                run_protocol2(input, ChannelParameter(n1), ChannelParameter(n2), m, r)}) {
            const auto d = oracle::compare(run);
            worst_p = std::max(worst_p, d.probability);
            worst_s = std::max(worst_s, d.state);
            branches += d.branches;
        }
    }
    return {worst_p <= 1e-12 && worst_s <= 1e-12,
            "50 configurations, " + std::to_string(branches) + " branches, max probability deviation " +
                fmt("%.2e", worst_p) + ", max state deviation " + fmt("%.2e", worst_s)};
}

Outcome withheld_bit() {
    std::mt19937_64 rng(110);
    std::uniform_real_distribution<double> u(0.05, 1.0);
    double worst_off = 0.0;
    double worst_recovered = 0.0;
    int configs = 0;
    while (configs < 20) {
        const auto input = haar_sample(rng);
        if (std::abs(input.alpha * input.beta) <= 0.05) {
            continue;
        }
        ++configs;
        const Complex n{u(rng)};
        const Complex m{u(rng)};
        const auto run = run_protocol1(input, ChannelParameter(n), BasisParameter(m));
        for (const std::string label : {"PhiPlus", "PhiMinus", "PsiPlus", "PsiMinus"}) {
            const auto rho = bob_bit_withheld_state(run, label);
            worst_off = std::max({worst_off, std::abs(rho[0][1]), std::abs(rho[1][0])});
        }
        for (const auto& b : run.branches) {
            const auto f = table1_final_state(b.alice_label, input, n, m);
            const auto want = normalize({f[0], f[1]}).first;
            worst_recovered = std::max(worst_recovered, 1.0 - fidelity(want, *b.receiver_state));
        }
    }
    return {worst_off < 1e-12 && worst_recovered < 1e-10,
            "20 configurations, max off-diagonal " + fmt("%.2e", worst_off) +
                ", max infidelity against the conditional table states with the bit supplied " +
                fmt("%.2e", worst_recovered)};
}

Outcome nparty_reductions() {
    const auto start = Clock::now();
    std::mt19937_64 rng(111);
    std::uniform_real_distribution<double> u(-1.3, 1.3);
    double reduction = 0.0;
    bool corrections_agree = true;
    const auto compare_runs = [&](const ProtocolRun& a, const ProtocolRun& b) {
        if (a.branches.size() != b.branches.size()) {
            reduction = 1.0;
            return;
        }
        for (std::size_t i = 0; i < a.branches.size(); ++i) {
            const auto& x = a.branches[i];
            const auto& y = b.branches[i];
            if (x.alice_label != y.alice_label || x.helper_labels != y.helper_labels ||
                x.received_state.has_value() != y.received_state.has_value()) {
                reduction = 1.0;
                return;
            }
            reduction = std::max({reduction, std::abs(x.probability - y.probability), std::abs(x.fidelity - y.fidelity)});
            if (x.received_state) {
                for (std::size_t k = 0; k < 2; ++k) {
                    reduction = std::max(reduction, std::abs((*x.received_state)[k] - (*y.received_state)[k]));
                }
            }
            corrections_agree = corrections_agree && oracle::same_up_to_phase(x.correction.unitary, y.correction.unitary);
        }
    };
    for (int i = 0; i < 30; ++i) {
        const auto input = haar_sample(rng);
        const ChannelParameter n1(Complex{u(rng), u(rng)});
        const ChannelParameter n2(Complex{u(rng), u(rng)});
        const BasisParameter m(Complex{u(rng), u(rng)});
        for (const auto r : {Receiver::bob(), Receiver::charlie()}) {
            compare_runs(run_nparty_ghz(input, 3, n1, m, r), run_protocol1(input, n1, m, r));
        }
        const std::vector<ChannelParameter> ch{n1, n2};
        compare_runs(run_nparty_bell(input, ch, m, Receiver::charlie()), run_protocol2(input, n1, n2, m));
        const std::vector<ChannelParameter> swapped{n2, n1};
        compare_runs(run_nparty_bell(input, swapped, m, Receiver::charlie()),
                     run_protocol2(input, n1, n2, m, Receiver::bob()));
    }

    double maximal = 0.0;
    std::size_t maximal_branches = 0;
    for (std::size_t parties = 4; parties <= 5; ++parties) {
        for (int i = 0; i < 5; ++i) {
            const auto input = haar_sample(rng);
            for (std::size_t r = 1; r < parties; ++r) {
                const std::vector<ChannelParameter> ones(parties - 1, ChannelParameter(Complex{1.0}));
                for (const auto& run : {run_nparty_ghz(input, parties, ChannelParameter(Complex{1.0}),
                                                       BasisParameter(Complex{1.0}), Receiver{r}),
                                        run_nparty_bell(input, ones, BasisParameter(Complex{1.0}), Receiver{r})}) {
                    for (const auto& b : run.branches) {
                        maximal = std::max(maximal, std::abs(1.0 - b.fidelity));
                        ++maximal_branches;
                    }
                }
            }
        }
    }

    // Four parties with the generalized strategies, checked against the oracle.
    std::uniform_real_distribution<double> w(0.1, 1.0);
    std::size_t targeted = 0;
    std::size_t targeted_bad = 0;
    double oracle_dev = 0.0;
    for (int i = 0; i < 20; ++i) {
        const auto input = haar_sample_generic(rng);
        const double n = w(rng);
        for (const auto& name : {"phi-plus", "phi-minus", "psi-plus", "psi-minus"}) {
            const auto s = strategy_by_name(ProtocolKind::NPartyGhz, name, 4);
            const std::vector<Complex> ch{Complex{n}};
            const auto m = choose_m(s, ch);
            for (std::size_t r = 1; r <= 3; ++r) {
                const auto run = run_nparty_ghz(input, 4, ChannelParameter(ch[0]), m, Receiver{r});
                const auto d = oracle::compare(run);
                oracle_dev = std::max({oracle_dev, d.probability, d.state});
                for (const auto& b : run.branches) {
                    if (contains(s.targets(true), b.alice_label)) {
                        ++targeted;
                        targeted_bad += b.fidelity > kSuccessThreshold ? 0 : 1;
                    }
                }
            }
        }
        for (int pattern = 0; pattern < 4; ++pattern) {
            const std::vector<int> bits{pattern & 1, (pattern >> 1) & 1, 0};
            for (const bool minus : {false, true}) {
                const auto s = nparty_bell_strategy(bits, minus);
                const std::vector<Complex> weights{Complex{w(rng)}, Complex{w(rng)}, Complex{w(rng)}};
                const std::vector<ChannelParameter> ch{ChannelParameter(weights[0]), ChannelParameter(weights[1]),
                                                       ChannelParameter(weights[2])};
                const auto m = choose_m(s, weights);
                for (std::size_t r = 1; r <= 3; ++r) {
                    const auto run = run_nparty_bell(input, ch, m, Receiver{r});
                    const auto d = oracle::compare(run);
                    oracle_dev = std::max({oracle_dev, d.probability, d.state});
                    for (const auto& b : run.branches) {
                        if (contains(s.target_outcomes, b.alice_label)) {
                            ++targeted;
                            targeted_bad += b.fidelity > kSuccessThreshold ? 0 : 1;
                        }
                    }
                }
            }
        }
    }
    const double t = seconds_since(start);
    const bool ok = reduction <= 1e-12 && corrections_agree && maximal <= 1e-12 && targeted_bad == 0 &&
                    oracle_dev <= 1e-12 && t < 30.0;
    return {ok, "N=3 max deviation " + fmt("%.2e", reduction) + (corrections_agree ? "" : " (corrections differ)") +
                    "; N=4,5 maximal: " + std::to_string(maximal_branches) + " branches, max |1-F| " +
                    fmt("%.2e", maximal) + "; N=4 strategies: " + std::to_string(targeted) + " targeted branches, " +
                    std::to_string(targeted_bad) + " below threshold, oracle deviation " + fmt("%.2e", oracle_dev) +
                    "; " + fmt("%.2f", t) + " s (limit 30 s)"};
}

Outcome reproducibility() {
    const std::vector<std::vector<std::string>> commands{
        {"run", "--protocol", "p1", "--n", "0.5", "--m", "strategy:phi-plus", "--seed", "31"},
        {"run", "--protocol", "p2", "--n1", "0.4", "--n2", "0.9", "--m", "0.2+0.1i", "--input", "haar:9", "--format",
         "csv"},
        {"run", "--protocol", "nparty-bell", "--n-list", "0.5,0.7,0.9", "--m", "strategy:h-minus", "--seed", "2"},
        {"verify-tables", "--seed", "2026"},
        {"efficiency", "--protocol", "p2", "--n1", "0.5", "--n2", "0.5", "--m", "0.25", "--samples", "5000", "--seed",
         "12"},
        {"efficiency", "--protocol", "p1", "--n", "0.3", "--m", "0.6", "--samples", "5000", "--seed", "12", "--threads",
         "3"},
        {"sweep", "--protocol", "p1", "--param", "n", "--m", "n", "--from", "0.1", "--to", "1", "--steps", "5",
         "--samples", "500", "--seed", "8"},
    };
    int identical = 0;
    for (const auto& c : commands) {
        std::ostringstream a;
        std::ostringstream b;
        std::ostringstream e;
        const int ca = cli::run_cli(c, a, e);
        const int cb = cli::run_cli(c, b, e);
        identical += (ca == 0 && cb == 0 && !a.str().empty() && a.str() == b.str()) ? 1 : 0;
    }
    return {identical == static_cast<int>(commands.size()),
            std::to_string(identical) + "/" + std::to_string(commands.size()) +
                " commands byte-identical on repetition"};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"Protocol-1 table reproduction", table1_reproduction},
        {"Protocol-2 table reproduction", table2_reproduction},
        {"Unity-fidelity strategies", unity_strategies},
        {"Deterministic limits", deterministic_limits},
        {"Analytic efficiency", analytic_efficiency},
        {"Monte Carlo vs analytic", mc_agreement},
        {"Haar moments", haar_moments},
        {"Protocol comparison", protocol_comparison},
        {"Oracle equivalence", oracle_equivalence},
        {"Mixedness without the helper's bit", withheld_bit},
        {"N-party reductions", nparty_reductions},
        {"Reproducibility", reproducibility},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += o.passed ? 0 : 1;
        std::printf("%s %2zu %s: %s\n", o.passed ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failures), criteria.size());
    return failures == 0 ? 0 : 1;
}
