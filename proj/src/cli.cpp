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

#include "qsts/cli.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"

namespace qsts::cli {

namespace {

using Json = nlohmann::ordered_json;

// Signals a handled failure with a specific exit code.
struct CliFailure {
    int code;
    std::string message;
};

double parse_real(std::string_view text) {
    double v = 0.0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    if (!text.empty() && *first == '+') {
        ++first;
    }
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || first == last) {
        throw ArgumentError("not a number: '" + std::string(text) + "'");
    }
    return v;
}

std::vector<std::string> split(std::string_view text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (const char c : text) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

Json complex_json(Complex c) {
    if (c.imag() == 0.0) {
        return c.real();
    }
    Json j;
    j["re"] = c.real();
    j["im"] = c.imag();
    return j;
}

Json amplitude_json(Complex c) {
    Json j;
    j["re"] = c.real();
    j["im"] = c.imag();
    return j;
}

void write_json(const Json& v, std::string& out, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
    switch (v.type()) {
        case Json::value_t::object: {
            if (v.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (const auto& [key, value] : v.items()) {
                if (!first) {
                    out += ",\n";
                }
                first = false;
                out += inner + Json(key).dump() + ": ";
                write_json(value, out, indent + 1);
            }
            out += "\n" + pad + "}";
            return;
        }
        case Json::value_t::array: {
            if (v.empty()) {
                out += "[]";
                return;
            }
            out += "[\n";
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (i > 0) {
                    out += ",\n";
                }
                out += inner;
                write_json(v[i], out, indent + 1);
            }
            out += "\n" + pad + "]";
            return;
        }
        case Json::value_t::number_float:
            out += format_double(v.get<double>());
            return;
        default:
            out += v.dump();
            return;
    }
}

std::string csv_double(double v) { return format_double(v); }

// Writes to --out when given, stdout otherwise.
void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw CliFailure{kIoError, "cannot open '" + path + "' for writing"};
    }
    file << text;
    if (!file) {
        throw CliFailure{kIoError, "failed writing '" + path + "'"};
    }
}

struct ProtocolOptions {
    std::string protocol;
    std::string n;
    std::string n1;
    std::string n2;
    std::string n_list;
    std::size_t parties = 0;
    std::string m = "1";
    std::string receiver;
};

void add_protocol_options(CLI::App& cmd, ProtocolOptions& o) {
    cmd.add_option("--protocol", o.protocol, "p1 | p2 | nparty-ghz | nparty-bell")
        ->required()
        ->check(CLI::IsMember({"p1", "p2", "nparty-ghz", "nparty-bell"}));
    cmd.add_option("--n", o.n, "channel weight (p1, nparty-ghz)");
    cmd.add_option("--n1", o.n1, "first channel weight (p2)");
    cmd.add_option("--n2", o.n2, "second channel weight (p2)");
    cmd.add_option("--n-list", o.n_list, "comma-separated channel weights (nparty-bell)");
    cmd.add_option("--parties", o.parties, "party count N including Alice (nparty-ghz)");
    cmd.add_option("--m", o.m, "basis weight, or strategy:<name>")->capture_default_str();
    cmd.add_option("--receiver", o.receiver, "bob | charlie | party index");
}

struct ResolvedProtocol {
    ProtocolConfig config;
    std::string strategy;
};

// `bindings` substitutes a swept value for a parameter that names it.
ResolvedProtocol resolve(const ProtocolOptions& o, const std::map<std::string, double>& bindings = {}) {
    const auto value_of = [&](const std::string& text, const char* flag) -> Complex {
        if (text.empty()) {
            throw ArgumentError(std::string("missing ") + flag);
        }
        if (const auto it = bindings.find(text); it != bindings.end()) {
            return {it->second, 0.0};
        }
        return parse_complex(text);
    };

    ResolvedProtocol r;
    auto& c = r.config;
    c.kind = protocol_from_string(o.protocol);
    switch (c.kind) {
        case ProtocolKind::P1:
            c.channel = {value_of(o.n, "--n")};
            break;
        case ProtocolKind::P2:
            c.channel = {value_of(o.n1, "--n1"), value_of(o.n2, "--n2")};
            break;
        case ProtocolKind::NPartyGhz:
            if (o.parties < 3 || o.parties > 10) {
                throw ArgumentError("--parties must be in [3, 10] for nparty-ghz");
            }
            c.parties = o.parties;
            c.channel = {value_of(o.n, "--n")};
            break;
        case ProtocolKind::NPartyBell:
            if (o.n_list.empty()) {
                throw ArgumentError("missing --n-list");
            }
            for (const auto& part : split(o.n_list, ',')) {
                c.channel.push_back(value_of(part, "--n-list entry"));
            }
            c.parties = c.channel.size() + 1;
            if (c.parties < 3 || c.parties > 6) {
                throw ArgumentError("--n-list must hold 2 to 5 weights");
            }
            if (o.parties != 0 && o.parties != c.parties) {
                throw ArgumentError("--parties disagrees with --n-list length");
            }
            break;
    }

    if (o.receiver.empty()) {
        c.receiver = Receiver{c.parties - 1};
    } else if (o.receiver == "bob") {
        c.receiver = Receiver::bob();
    } else if (o.receiver == "charlie") {
        c.receiver = Receiver::charlie();
    } else {
        const double idx = parse_real(o.receiver);
        if (idx < 1 || idx > static_cast<double>(c.parties - 1) || idx != std::floor(idx)) {
            throw ArgumentError("--receiver out of range");
        }
        c.receiver = Receiver{static_cast<std::size_t>(idx)};
    }
    if (c.receiver.party < 1 || c.receiver.party > c.parties - 1) {
        throw ArgumentError("--receiver out of range");
    }

    static constexpr std::string_view kPrefix = "strategy:";
    if (o.m.rfind(kPrefix, 0) == 0) {
        r.strategy = o.m.substr(kPrefix.size());
        const auto s = strategy_by_name(c.kind, r.strategy, c.parties);
        c.m = choose_m(s, c.channel).m;
    } else {
        c.m = value_of(o.m, "--m");
    }
    return r;
}

InputQubit parse_input(const std::string& text, std::uint64_t default_seed) {
    if (text.empty() || text == "haar") {
        std::mt19937_64 rng(default_seed);
        return haar_sample(rng);
    }
    if (text.rfind("haar:", 0) == 0) {
        const double seed = parse_real(std::string_view(text).substr(5));
        if (seed < 0 || seed != std::floor(seed)) {
            throw ArgumentError("haar seed must be a non-negative integer");
        }
        std::mt19937_64 rng(static_cast<std::uint64_t>(seed));
        return haar_sample(rng);
    }
    const auto parts = split(text, ',');
    if (parts.size() != 4) {
        throw ArgumentError("--input expects alpha_re,alpha_im,beta_re,beta_im or haar:<seed>");
    }
    return InputQubit({parse_real(parts[0]), parse_real(parts[1])}, {parse_real(parts[2]), parse_real(parts[3])});
}

std::string run_to_csv(const ProtocolRun& run) {
    std::ostringstream os;
    os << "alice,helpers,probability,fidelity,correction\n";
    for (const auto& b : run.branches) {
        std::string helpers;
        for (std::size_t i = 0; i < b.helper_labels.size(); ++i) {
            helpers += (i ? ";" : "") + b.helper_labels[i];
        }
        os << b.alice_label << ',' << helpers << ',' << csv_double(b.probability) << ',' << csv_double(b.fidelity)
           << ',' << b.correction.name << '\n';
    }
    return os.str();
}

int cmd_run(const ProtocolOptions& po, const std::string& input_text, std::uint64_t seed, const std::string& format,
            const std::string& out_path, std::ostream& out) {
    const auto resolved = resolve(po);
    const auto input = parse_input(input_text, seed);
    const auto run = run_protocol(resolved.config, input);
    if (format == "csv") {
        emit(run_to_csv(run), out_path, out);
    } else {
        emit(to_json_text(run_to_json(run, resolved.strategy)) + "\n", out_path, out);
    }
    return kSuccess;
}

int cmd_efficiency(const ProtocolOptions& po, std::uint64_t samples, std::uint64_t seed, bool analytic_only,
                   int threads, const std::string& format, const std::string& out_path, std::ostream& out) {
    const auto resolved = resolve(po);
    Json j;
    EfficiencyReport report;
    if (analytic_only) {
        report.analytic = cpro_analytic(resolved.config);
        if (!report.analytic) {
            throw ArgumentError("no closed form for these parameters; drop --analytic-only");
        }
        j["analytic"] = *report.analytic;
    } else {
        report = cpro_monte_carlo(resolved.config, samples, seed, {threads, Tally::AllBranches});
        j = report_to_json(report);
    }
    if (format == "csv") {
        std::ostringstream os;
        os << "analytic,estimate,samples,std_error,seed\n";
        os << (report.analytic ? csv_double(*report.analytic) : "") << ',';
        if (analytic_only) {
            os << ",,,\n";
        } else {
            os << csv_double(report.estimate) << ',' << report.samples << ',' << csv_double(report.std_error) << ','
               << report.seed << '\n';
        }
        emit(os.str(), out_path, out);
    } else {
        emit(to_json_text(j) + "\n", out_path, out);
    }
    return kSuccess;
}

struct SweepOptions {
    std::string param;
    double from = 0.0;
    double to = 1.0;
    std::size_t steps = 10;
    std::uint64_t samples = 1000;
    std::uint64_t seed = 0;
    bool analytic_only = false;
    std::string out;
};

int cmd_sweep(const ProtocolOptions& po, const SweepOptions& so, int threads, std::ostream& out) {
    if (so.steps < 1) {
        throw ArgumentError("--steps must be >= 1");
    }
    if (so.from > so.to) {
        throw ArgumentError("--from must not exceed --to");
    }
    static const std::vector<std::string> kSweepable = {"n", "n1", "n2", "m"};
    if (std::find(kSweepable.begin(), kSweepable.end(), so.param) == kSweepable.end()) {
        throw ArgumentError("--param must be one of n, n1, n2, m");
    }
    // The swept parameter's own flag defaults to the swept value.
    ProtocolOptions bound = po;
    auto& slot = so.param == "n" ? bound.n : so.param == "n1" ? bound.n1 : so.param == "n2" ? bound.n2 : bound.m;
    if (slot.empty() || (so.param == "m" && slot == "1")) {
        slot = so.param;
    }
    std::ostringstream os;
    os << "param,value,analytic,estimate,std_error\n";
    for (std::size_t i = 0; i < so.steps; ++i) {
        const double value =
            so.steps == 1 ? so.from : so.from + (so.to - so.from) * static_cast<double>(i) / static_cast<double>(so.steps - 1);
        const auto resolved = resolve(bound, {{so.param, value}});
        const auto analytic = cpro_analytic(resolved.config);
        os << so.param << ',' << csv_double(value) << ',' << (analytic ? csv_double(*analytic) : "") << ',';
        if (so.analytic_only) {
            os << ",\n";
        } else {
            const auto report = cpro_monte_carlo(resolved.config, so.samples, so.seed, {threads, Tally::AllBranches});
            os << csv_double(report.estimate) << ',' << csv_double(report.std_error) << '\n';
        }
    }
    emit(os.str(), so.out, out);
    return kSuccess;
}

int cmd_verify_tables(double tolerance, bool corrupt, bool verbose, std::uint64_t seed, std::ostream& out) {
    if (!(tolerance > 0.0)) {
        throw ArgumentError("--tolerance must be > 0");
    }
    static constexpr std::array<double, 3> kGrid = {0.3, 0.7, 1.0};
    constexpr int kInputs = 5;
    std::mt19937_64 rng(seed);
    std::vector<InputQubit> inputs;
    for (int i = 0; i < kInputs; ++i) {
        inputs.push_back(haar_sample_generic(rng));
    }
    const CorrectionTable t1 =
        corrupt ? table1_corrections().with_entry("PhiPlus", "XPlus", "Z") : table1_corrections();

    struct Tally {
        std::size_t checks = 0;
        std::size_t passed = 0;
        double worst = 0.0;
        std::string correction;
    };
    std::vector<std::pair<std::string, Tally>> rows;
    const auto record = [&](const std::string& table, const TableReport& report, const std::string& where) {
        for (const auto& r : report.rows) {
            const std::string key = table + " " + r.alice_label + "/" + r.bob_label;
            auto it = std::find_if(rows.begin(), rows.end(), [&](const auto& p) { return p.first == key; });
            if (it == rows.end()) {
                rows.push_back({key, Tally{}});
                it = std::prev(rows.end());
            }
            auto& t = it->second;
            ++t.checks;
            t.passed += r.passed ? 1 : 0;
            t.worst = std::max(t.worst, std::abs(1.0 - r.fidelity));
            t.correction = r.correction;
            if (verbose) {
                out << (r.passed ? "PASS " : "FAIL ") << key << ' ' << where << " fidelity=" << format_double(r.fidelity)
                    << '\n';
            }
        }
    };

    for (const double n : kGrid) {
        for (const double m : kGrid) {
            for (int i = 0; i < kInputs; ++i) {
                const auto report =
                    verify_table1(ChannelParameter(n), BasisParameter(m), inputs[static_cast<std::size_t>(i)], tolerance, t1);
                record("table1", report,
                       "n=" + format_double(n) + " m=" + format_double(m) + " input=" + std::to_string(i));
            }
        }
    }
    for (const double n1 : kGrid) {
        for (const double n2 : kGrid) {
            for (const double m : kGrid) {
                for (int i = 0; i < kInputs; ++i) {
                    const auto report = verify_table2(ChannelParameter(n1), ChannelParameter(n2), BasisParameter(m),
                                                      inputs[static_cast<std::size_t>(i)], tolerance);
                    record("table2", report,
                           "n1=" + format_double(n1) + " n2=" + format_double(n2) + " m=" + format_double(m) +
                               " input=" + std::to_string(i));
                }
            }
        }
    }
    std::size_t failed_rows = 0;
    for (const auto& [key, t] : rows) {
        const bool ok = t.passed == t.checks;
        failed_rows += ok ? 0 : 1;
        out << (ok ? "PASS " : "FAIL ") << key << " correction=" << t.correction << " checks=" << t.checks
            << " passed=" << t.passed << " max_infidelity=" << format_double(t.worst) << '\n';
    }
    out << (failed_rows == 0 ? "OK " : "FAILED ") << rows.size() - failed_rows << "/" << rows.size()
        << " rows pass (tolerance " << format_double(tolerance) << ")\n";
    return failed_rows == 0 ? kSuccess : kVerificationFailure;
}

}  // namespace

std::complex<double> parse_complex(std::string_view text) {
    if (text.empty()) {
        throw ArgumentError("empty number");
    }
    if (text.back() != 'i') {
        return {parse_real(text), 0.0};
    }
    const std::string_view body = text.substr(0, text.size() - 1);
    std::size_t split_at = std::string_view::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
            split_at = i;
            break;
        }
    }
    const auto imag_of = [](std::string_view s) {
        if (s.empty() || s == "+") return 1.0;
        if (s == "-") return -1.0;
        return parse_real(s);
    };
    if (split_at == std::string_view::npos) {
        return {0.0, imag_of(body)};
    }
    return {parse_real(body.substr(0, split_at)), imag_of(body.substr(split_at))};
}

std::string format_double(double value) {
    if (!std::isfinite(value)) {
        throw ArgumentError("cannot serialize a non-finite number");
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    std::string s(buf);
    if (s.find_first_of(".e") == std::string::npos) {
        s += ".0";
    }
    return s;
}

std::string to_json_text(const nlohmann::ordered_json& value) {
    std::string out;
    write_json(value, out, 0);
    return out;
}

nlohmann::ordered_json run_to_json(const ProtocolRun& run, std::string_view strategy) {
    Json j;
    j["protocol"] = std::string(to_string(run.protocol));
    Json params;
    switch (run.protocol) {
        case ProtocolKind::P1:
            params["n"] = complex_json(run.channel[0]);
            break;
        case ProtocolKind::P2:
            params["n1"] = complex_json(run.channel[0]);
            params["n2"] = complex_json(run.channel[1]);
            break;
        case ProtocolKind::NPartyGhz:
            params["n"] = complex_json(run.channel[0]);
            params["parties"] = run.parties;
            break;
        case ProtocolKind::NPartyBell: {
            Json list = Json::array();
            for (const auto& c : run.channel) {
                list.push_back(complex_json(c));
            }
            params["n_list"] = list;
            params["parties"] = run.parties;
            break;
        }
    }
    params["m"] = complex_json(run.m);
    j["params"] = params;
    if (!strategy.empty()) {
        j["strategy"] = std::string(strategy);
    }
    j["receiver"] = receiver_name(run.receiver, run.protocol);
    Json input;
    input["alpha"] = amplitude_json(run.input.alpha);
    input["beta"] = amplitude_json(run.input.beta);
    j["input"] = input;
    Json branches = Json::array();
    for (const auto& b : run.branches) {
        Json e;
        e["alice"] = b.alice_label;
        e["bob_or_helpers"] = b.helper_labels;
        e["probability"] = b.probability;
        e["fidelity"] = b.fidelity;
        e["correction"] = b.correction.name;
        branches.push_back(e);
    }
    j["branches"] = branches;
    j["success_probability"] = run.success_probability;
    Json bits;
    bits["alice"] = run.classical_bits.alice;
    bits["per_helper"] = run.classical_bits.per_helper;
    bits["helpers"] = run.classical_bits.helpers;
    bits["total"] = run.classical_bits.total();
    j["classical_bits"] = bits;
    return j;
}

nlohmann::ordered_json report_to_json(const EfficiencyReport& report) {
    Json j;
    if (report.analytic) {
        j["analytic"] = *report.analytic;
    }
    j["estimate"] = report.estimate;
    j["samples"] = report.samples;
    j["std_error"] = report.std_error;
    j["seed"] = report.seed;
    return j;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quantum state sharing over partially entangled channels"};
    app.require_subcommand(1);

    ProtocolOptions run_opts;
    std::string input_text;
    std::uint64_t seed = 0;
    std::string format = "json";
    std::string out_path;
    auto* run_cmd = app.add_subcommand("run", "Run one protocol instance and list every branch");
    add_protocol_options(*run_cmd, run_opts);
    run_cmd->add_option("--input", input_text, "alpha_re,alpha_im,beta_re,beta_im or haar:<seed>");
    run_cmd->add_option("--seed", seed, "seed for a Haar input when --input is omitted");
    run_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    run_cmd->add_option("--out", out_path, "write to a file instead of stdout");

    double tolerance = 1e-10;
    bool corrupt = false;
    bool verbose = false;
    std::uint64_t verify_seed = 2026;
    auto* verify_cmd = app.add_subcommand("verify-tables", "Check simulated branches against both correction tables");
    verify_cmd->add_option("--tolerance", tolerance)->capture_default_str();
    verify_cmd->add_option("--seed", verify_seed, "seed for the Haar inputs in the grid")->capture_default_str();
    verify_cmd->add_flag("--corrupt", corrupt, "replace one protocol-1 table correction (negative control)");
    verify_cmd->add_flag("--verbose", verbose, "print every individual check");

    ProtocolOptions eff_opts;
    std::uint64_t samples = 10000;
    std::uint64_t eff_seed = 0;
    bool analytic_only = false;
    int threads = -1;
    std::string eff_format = "json";
    std::string eff_out;
    auto* eff_cmd = app.add_subcommand("efficiency", "Haar-averaged protocol efficiency");
    add_protocol_options(*eff_cmd, eff_opts);
    eff_cmd->add_option("--samples", samples)->capture_default_str();
    eff_cmd->add_option("--seed", eff_seed)->capture_default_str();
    eff_cmd->add_flag("--analytic-only", analytic_only);
    eff_cmd->add_option("--threads", threads, "sampler threads (overrides QSTS_THREADS; 0 = auto)");
    eff_cmd->add_option("--format", eff_format)->check(CLI::IsMember({"json", "csv"}));
    eff_cmd->add_option("--out", eff_out);

    ProtocolOptions sweep_opts;
    SweepOptions sweep;
    int sweep_threads = -1;
    auto* sweep_cmd = app.add_subcommand("sweep", "Efficiency along one parameter, as CSV");
    add_protocol_options(*sweep_cmd, sweep_opts);
    sweep_cmd->add_option("--param", sweep.param, "n | n1 | n2 | m")->required();
    sweep_cmd->add_option("--from", sweep.from)->required();
    sweep_cmd->add_option("--to", sweep.to)->required();
    sweep_cmd->add_option("--steps", sweep.steps)->capture_default_str();
    sweep_cmd->add_option("--samples", sweep.samples)->capture_default_str();
    sweep_cmd->add_option("--seed", sweep.seed)->capture_default_str();
    sweep_cmd->add_flag("--analytic-only", sweep.analytic_only);
    sweep_cmd->add_option("--threads", sweep_threads);
    sweep_cmd->add_option("--out", sweep.out);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidArguments;
    }

    try {
        const auto pick_threads = [](int flag) { return flag >= 0 ? flag : threads_from_env(); };
        if (run_cmd->parsed()) {
            return cmd_run(run_opts, input_text, seed, format, out_path, out);
        }
        if (verify_cmd->parsed()) {
            return cmd_verify_tables(tolerance, corrupt, verbose, verify_seed, out);
        }
        if (eff_cmd->parsed()) {
            return cmd_efficiency(eff_opts, samples, eff_seed, analytic_only, pick_threads(threads), eff_format,
                                  eff_out, out);
        }
        if (sweep_cmd->parsed()) {
            return cmd_sweep(sweep_opts, sweep, pick_threads(sweep_threads), out);
        }
    } catch (const DegenerateChannelError& e) {
        err << "error: " << e.what() << '\n';
        return kDegenerateStrategy;
    } catch (const ArgumentError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidArguments;
    } catch (const CliFailure& f) {
        err << "error: " << f.message << '\n';
        return f.code;
    }
    return kInvalidArguments;
}

}  // namespace qsts::cli
