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

#include "qsts/protocols.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "qsts/measurement.hpp"

namespace qsts {

namespace {

const std::string kXPlus = "XPlus";

bool ends_with(std::string_view s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

// Physical arrangement of one protocol instance.
struct Layout {
    PureState joint;
    std::vector<std::size_t> alice_qubits;
    std::vector<std::size_t> helper_qubits;
};

using CorrectionRule =
    std::function<Correction(std::size_t alice_index, std::span<const std::string> helper_labels)>;

struct PendingBranch {
    std::vector<std::string> helper_labels;
    double probability;
    std::optional<PureState> state;
};

// Measures the helpers one at a time, in order. `positions` are the helpers'
// indices in the current (shrinking) state.
void measure_helpers(const std::optional<PureState>& state, double probability, std::vector<std::size_t> positions,
                     std::vector<std::string> labels, std::size_t helper_count, std::vector<PendingBranch>& out) {
    static const BasisSet xb = x_basis();
    if (positions.empty()) {
        out.push_back({std::move(labels), probability, state});
        return;
    }
    const std::size_t target = positions.front();
    std::vector<std::size_t> rest(positions.begin() + 1, positions.end());
    for (auto& p : rest) {
        if (p > target) {
            --p;
        }
    }
    if (!state) {
        for (const auto& label : xb.labels) {
            auto next = labels;
            next.push_back(label);
            measure_helpers(std::nullopt, 0.0, rest, std::move(next), helper_count, out);
        }
        return;
    }
    const std::array<std::size_t, 1> targets{target};
    for (auto& outcome : measure(*state, targets, xb)) {
        auto next = labels;
        next.push_back(outcome.label);
        measure_helpers(outcome.post_state, probability * outcome.probability, rest, std::move(next), helper_count,
                        out);
    }
}

std::vector<BranchRecord> execute(const Layout& layout, const BasisSet& alice_basis, const InputQubit& input,
                                  const CorrectionRule& correction_for) {
    const auto& alice = layout.alice_qubits;
    std::vector<std::size_t> helper_positions;
    for (const auto h : layout.helper_qubits) {
        const auto shift = static_cast<std::size_t>(std::count_if(alice.begin(), alice.end(), [h](auto a) { return a < h; }));
        helper_positions.push_back(h - shift);
    }
    const PureState target_state = input.state();

    std::vector<BranchRecord> branches;
    const auto outcomes = measure(layout.joint, alice, alice_basis);
    for (std::size_t j = 0; j < outcomes.size(); ++j) {
        const auto& outcome = outcomes[j];
        std::vector<PendingBranch> pending;
        measure_helpers(outcome.post_state, outcome.probability, helper_positions, {},
                        layout.helper_qubits.size(), pending);
        for (auto& p : pending) {
            BranchRecord record;
            record.alice_label = outcome.label;
            record.helper_labels = std::move(p.helper_labels);
            record.probability = p.probability;
            record.correction = correction_for(j, record.helper_labels);
            if (p.state && std::sqrt(p.probability) > kZeroNorm) {
                record.received_state = *p.state;
                record.receiver_state = apply_unitary(*p.state, record.correction.unitary, 0);
                record.fidelity = fidelity(target_state, *record.receiver_state);
            }
            branches.push_back(std::move(record));
        }
    }
    return branches;
}

void finish(ProtocolRun& run) {
    run.success_probability = 0.0;
    for (const auto& b : run.branches) {
        if (b.fidelity > kSuccessThreshold) {
            run.success_probability += b.probability;
        }
    }
}

PureState tensor_all(const std::vector<PureState>& parts) {
    PureState out = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) {
        out = tensor(out, parts[i]);
    }
    return out;
}

// Correction derived from the branch structure: the receiver flips when the
// alpha-carrying term sits on its |1>, then fixes the relative sign.
Correction structural_correction(int alpha_bit_at_receiver, bool minus_state, std::span<const std::string> helpers) {
    int parity = minus_state ? 1 : 0;
    for (const auto& h : helpers) {
        if (h != kXPlus) {
            parity ^= 1;
        }
    }
    std::string name;
    if (parity) {
        name += "Z";
    }
    if (alpha_bit_at_receiver) {
        name += "X";
    }
    return correction_from_name(name.empty() ? "I" : name);
}

void require_receiver(Receiver receiver, std::size_t parties) {
    if (receiver.party < 1 || receiver.party > parties - 1) {
        throw ArgumentError("receiver must be a party index in [1, " + std::to_string(parties - 1) + "]");
    }
}

std::vector<std::size_t> helpers_except(std::size_t parties, Receiver receiver,
                                        const std::function<std::size_t(std::size_t)>& qubit_of_party) {
    std::vector<std::size_t> helpers;
    for (std::size_t k = 1; k < parties; ++k) {
        if (k != receiver.party) {
            helpers.push_back(qubit_of_party(k));
        }
    }
    return helpers;
}

Complex product(std::span<const Complex> channel, std::span<const std::size_t> indices) {
    Complex p{1.0, 0.0};
    for (const auto i : indices) {
        if (i >= channel.size()) {
            throw ArgumentError("strategy refers to channel parameter " + std::to_string(i + 1) +
                                " but only " + std::to_string(channel.size()) + " were given");
        }
        p *= channel[i];
    }
    return p;
}

std::array<Complex, 2> scaled(const InputQubit& in, Complex a, Complex b) { return {a * in.alpha, b * in.beta}; }

TableReport verify_rows(const ProtocolRun& run, double tolerance,
                        const std::function<std::array<Complex, 2>(const std::string&)>& expected_for) {
    TableReport report;
    for (const auto& branch : run.branches) {
        RowCheck row;
        row.alice_label = branch.alice_label;
        row.bob_label = branch.helper_labels.front();
        row.correction = branch.correction.name;
        row.probability = branch.probability;
        auto expected = expected_for(branch.alice_label);
        const double expected_norm = std::sqrt(std::norm(expected[0]) + std::norm(expected[1]));
        if (!branch.receiver_state) {
            row.passed = expected_norm <= kZeroNorm;
        } else if (expected_norm > kZeroNorm) {
            const PureState want = normalize({expected[0], expected[1]}).first;
            row.fidelity = fidelity(want, *branch.receiver_state);
            row.passed = std::abs(1.0 - row.fidelity) <= tolerance;
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace

std::string_view to_string(ProtocolKind kind) {
    switch (kind) {
        case ProtocolKind::P1: return "p1";
        case ProtocolKind::P2: return "p2";
        case ProtocolKind::NPartyGhz: return "nparty-ghz";
        case ProtocolKind::NPartyBell: return "nparty-bell";
    }
    return "unknown";
}

ProtocolKind protocol_from_string(std::string_view name) {
    for (auto k : {ProtocolKind::P1, ProtocolKind::P2, ProtocolKind::NPartyGhz, ProtocolKind::NPartyBell}) {
        if (to_string(k) == name) {
            return k;
        }
    }
    throw ArgumentError("unknown protocol '" + std::string(name) + "'");
}

std::string receiver_name(Receiver r, ProtocolKind kind) {
    if (kind == ProtocolKind::P1 || kind == ProtocolKind::P2) {
        return r.party == 1 ? "bob" : "charlie";
    }
    return std::to_string(r.party);
}

Correction correction_from_name(std::string_view name) {
    if (name.empty()) {
        throw ArgumentError("empty correction name");
    }
    SingleQubitUnitary u = pauli::identity();
    for (const char c : name) {
        switch (c) {
            case 'I': break;
            case 'X': u = u * pauli::x(); break;
            case 'Z': u = u * pauli::z(); break;
            default: throw ArgumentError("unknown correction '" + std::string(name) + "'");
        }
    }
    return {std::string(name), u};
}

CorrectionTable::CorrectionTable(std::map<Key, std::string> entries) {
    for (auto& [key, name] : entries) {
        entries_.emplace(key, correction_from_name(name));
    }
}

const Correction& CorrectionTable::at(const std::string& alice, const std::string& bob) const {
    const auto it = entries_.find({alice, bob});
    if (it == entries_.end()) {
        throw ArgumentError("no correction for (" + alice + ", " + bob + ")");
    }
    return it->second;
}

std::vector<CorrectionTable::Key> CorrectionTable::keys() const {
    std::vector<Key> out;
    for (const auto& [k, v] : entries_) {
        out.push_back(k);
    }
    return out;
}

CorrectionTable CorrectionTable::with_entry(const std::string& alice, const std::string& bob,
                                            std::string_view correction) const {
    CorrectionTable copy = *this;
    copy.entries_.insert_or_assign(Key{alice, bob}, correction_from_name(correction));
    return copy;
}

const CorrectionTable& table1_corrections() {
    static const CorrectionTable table({
        {{"PhiPlus", "XPlus"}, "I"},   {{"PhiPlus", "XMinus"}, "Z"},
        {{"PhiMinus", "XPlus"}, "Z"},  {{"PhiMinus", "XMinus"}, "I"},
        {{"PsiPlus", "XPlus"}, "X"},   {{"PsiPlus", "XMinus"}, "XZ"},
        {{"PsiMinus", "XPlus"}, "ZX"}, {{"PsiMinus", "XMinus"}, "X"},
    });
    return table;
}

const CorrectionTable& table2_corrections() {
    static const CorrectionTable table({
        {{"GHZPlus", "XPlus"}, "I"},  {{"GHZPlus", "XMinus"}, "Z"},
        {{"GHZMinus", "XPlus"}, "Z"}, {{"GHZMinus", "XMinus"}, "I"},
        {{"GPlus", "XPlus"}, "I"},    {{"GPlus", "XMinus"}, "Z"},
        {{"GMinus", "XPlus"}, "Z"},   {{"GMinus", "XMinus"}, "I"},
        {{"HPlus", "XPlus"}, "X"},    {{"HPlus", "XMinus"}, "XZ"},
        {{"HMinus", "XPlus"}, "XZ"},  {{"HMinus", "XMinus"}, "X"},
        {{"ZPlus", "XPlus"}, "X"},    {{"ZPlus", "XMinus"}, "ZX"},
        {{"ZMinus", "XPlus"}, "ZX"},  {{"ZMinus", "XMinus"}, "X"},
    });
    return table;
}

double ProtocolRun::total_probability() const {
    double total = 0.0;
    for (const auto& b : branches) {
        total += b.probability;
    }
    return total;
}

double ProtocolRun::weighted_fidelity() const {
    double total = 0.0;
    for (const auto& b : branches) {
        total += b.probability * b.fidelity;
    }
    return total;
}

ProtocolRun run_protocol1(const InputQubit& input, ChannelParameter n, BasisParameter m, Receiver receiver) {
    return run_protocol1(input, n, m, receiver, table1_corrections());
}

ProtocolRun run_protocol1(const InputQubit& input, ChannelParameter n, BasisParameter m, Receiver receiver,
                          const CorrectionTable& corrections) {
    require_receiver(receiver, 3);
    // Qubits: input, Alice's channel half, Bob, Charlie. The channel is
    // symmetric in Bob and Charlie, so swapping roles only swaps the helper.
    const std::size_t bob = 2;
    const std::size_t charlie = 3;
    Layout layout{tensor(input.state(), channel_ghz(n)), {0, 1}, {receiver == Receiver::bob() ? charlie : bob}};
    const BasisSet basis = generalized_bell_basis(m);

    ProtocolRun run;
    run.protocol = ProtocolKind::P1;
    run.input = input;
    run.channel = {n.n};
    run.m = m.m;
    run.receiver = receiver;
    run.classical_bits = {2, 1, 1};
    run.branches = execute(layout, basis, input, [&](std::size_t j, std::span<const std::string> helpers) {
        return corrections.at(basis.labels[j], helpers.front());
    });
    finish(run);
    return run;
}

ProtocolRun run_protocol2(const InputQubit& input, ChannelParameter n1, ChannelParameter n2, BasisParameter m,
                          Receiver receiver) {
    return run_protocol2(input, n1, n2, m, receiver, table2_corrections());
}

ProtocolRun run_protocol2(const InputQubit& input, ChannelParameter n1, ChannelParameter n2, BasisParameter m,
                          Receiver receiver, const CorrectionTable& corrections) {
    require_receiver(receiver, 3);
    // Qubits: input, Alice-helper half, helper, Alice-receiver half, receiver.
    // With Charlie receiving, the helper is Bob on channel n1.
    const bool to_bob = receiver == Receiver::bob();
    const ChannelParameter helper_channel = to_bob ? n2 : n1;
    const ChannelParameter receiver_channel = to_bob ? n1 : n2;
    Layout layout{tensor_all({input.state(), channel_bell(helper_channel), channel_bell(receiver_channel)}),
                  {0, 1, 3},
                  {2}};
    const BasisSet basis = generalized_ghz_basis(m);

    ProtocolRun run;
    run.protocol = ProtocolKind::P2;
    run.input = input;
    run.channel = {n1.n, n2.n};
    run.m = m.m;
    run.receiver = receiver;
    run.classical_bits = {3, 1, 1};
    run.branches = execute(layout, basis, input, [&](std::size_t j, std::span<const std::string> helpers) {
        return corrections.at(basis.labels[j], helpers.front());
    });
    finish(run);
    return run;
}

ProtocolRun run_nparty_ghz(const InputQubit& input, std::size_t parties, ChannelParameter n, BasisParameter m,
                           Receiver receiver) {
    if (parties < 3 || parties > 10) {
        throw ArgumentError("run_nparty_ghz: parties must be in [3, 10]");
    }
    require_receiver(receiver, parties);
    // Qubit 0 is the input, qubit 1 Alice's channel half, qubit 1+k party k.
    Layout layout{tensor(input.state(), channel_ghz(parties, n)), {0, 1},
                  helpers_except(parties, receiver, [](std::size_t k) { return k + 1; })};
    const BasisSet basis = generalized_bell_basis(m);

    ProtocolRun run;
    run.protocol = ProtocolKind::NPartyGhz;
    run.input = input;
    run.channel = {n.n};
    run.parties = parties;
    run.m = m.m;
    run.receiver = receiver;
    run.classical_bits = {2, 1, parties - 2};
    run.branches = execute(layout, basis, input, [](std::size_t j, std::span<const std::string> helpers) {
        // Bell index j pairs s = j/2 (|00> or |01>) with its complement; the
        // alpha term always has input bit 0, so the receiver's bit is s's second bit.
        const int alpha_bit = static_cast<int>(j / 2);
        return structural_correction(alpha_bit, j % 2 == 1, helpers);
    });
    finish(run);
    return run;
}

ProtocolRun run_nparty_bell(const InputQubit& input, std::span<const ChannelParameter> channel, BasisParameter m,
                            Receiver receiver) {
    const std::size_t parties = channel.size() + 1;
    if (parties < 3 || parties > 6) {
        throw ArgumentError("run_nparty_bell: parties must be in [3, 6]");
    }
    require_receiver(receiver, parties);
    // Qubit 0 is the input; channel k occupies (2k-1, 2k) with party k on 2k.
    std::vector<PureState> parts{input.state()};
    std::vector<std::size_t> alice{0};
    for (std::size_t k = 1; k < parties; ++k) {
        parts.push_back(channel_bell(channel[k - 1]));
        alice.push_back(2 * k - 1);
    }
    Layout layout{tensor_all(parts), alice, helpers_except(parties, receiver, [](std::size_t k) { return 2 * k; })};
    const BasisSet basis = generalized_complement_basis(parties, m);

    ProtocolRun run;
    run.protocol = ProtocolKind::NPartyBell;
    run.input = input;
    for (const auto& c : channel) {
        run.channel.push_back(c.n);
    }
    run.parties = parties;
    run.m = m.m;
    run.receiver = receiver;
    run.classical_bits = {parties, 1, parties - 2};
    const std::size_t width = parties;
    const std::size_t all_ones = (std::size_t{1} << width) - 1;
    run.branches = execute(layout, basis, input, [&](std::size_t j, std::span<const std::string> helpers) {
        const std::size_t s = 2 * (j / 2);
        const bool input_bit = ((s >> (width - 1)) & 1U) != 0;
        const std::size_t alpha_string = input_bit ? (all_ones ^ s) : s;
        const int alpha_bit = static_cast<int>((alpha_string >> (width - 1 - receiver.party)) & 1U);
        return structural_correction(alpha_bit, j % 2 == 1, helpers);
    });
    finish(run);
    return run;
}

std::vector<std::string> MStrategy::targets(bool real_parameters) const {
    auto out = target_outcomes;
    if (real_parameters) {
        out.insert(out.end(), real_partner_outcomes.begin(), real_partner_outcomes.end());
    }
    return out;
}

MStrategy strategy_by_name(ProtocolKind protocol, std::string_view name, std::size_t parties) {
    MStrategy s;
    s.protocol = protocol;
    s.name = std::string(name);
    if (protocol == ProtocolKind::P1 || protocol == ProtocolKind::NPartyGhz) {
        if (name == "phi-plus") {
            s.target_outcomes = {"PhiPlus"};
            s.real_partner_outcomes = {"PsiMinus"};
            s.rule = {true, {}, {0}};
        } else if (name == "phi-minus") {
            s.target_outcomes = {"PhiMinus"};
            s.real_partner_outcomes = {"PsiPlus"};
            s.rule = {false, {0}, {}};
        } else if (name == "psi-plus") {
            s.target_outcomes = {"PsiPlus"};
            s.real_partner_outcomes = {"PhiMinus"};
            s.rule = {true, {0}, {}};
        } else if (name == "psi-minus") {
            s.target_outcomes = {"PsiMinus"};
            s.real_partner_outcomes = {"PhiPlus"};
            s.rule = {false, {}, {0}};
        } else {
            throw ArgumentError("unknown strategy '" + std::string(name) + "' for " + std::string(to_string(protocol)));
        }
        return s;
    }
    const bool three = protocol == ProtocolKind::P2 || parties == 3;
    const bool plus = ends_with(name, "-plus");
    const bool minus = ends_with(name, "-minus");
    const std::string stem = plus ? std::string(name.substr(0, name.size() - 5))
                             : minus ? std::string(name.substr(0, name.size() - 6))
                                     : std::string();
    if (stem == "ghz" || stem == "h") {
        if (three) {
            s = nparty_bell_strategy(std::array{0, 0}, minus);
        } else {
            s = nparty_bell_strategy(std::vector<int>(parties - 1, 0), minus);
        }
    } else if ((stem == "g" || stem == "z") && three) {
        s = nparty_bell_strategy(std::array{1, 0}, minus);
    } else {
        throw ArgumentError("unknown strategy '" + std::string(name) + "' for " + std::string(to_string(protocol)));
    }
    s.protocol = protocol;
    s.name = std::string(name);
    return s;
}

MStrategy nparty_bell_strategy(std::span<const int> party_bits, bool minus) {
    const std::size_t parties = party_bits.size() + 1;
    if (parties < 3) {
        throw ArgumentError("nparty_bell_strategy: need at least two party bits");
    }
    if (party_bits.back() != 0) {
        throw ArgumentError("nparty_bell_strategy: the last party's bit is 0 in every plus-string");
    }
    MStrategy s;
    s.protocol = ProtocolKind::NPartyBell;
    std::vector<std::size_t> ones;
    std::vector<std::size_t> zeros;
    std::size_t s_value = 0;
    for (std::size_t k = 0; k < party_bits.size(); ++k) {
        if (party_bits[k] != 0 && party_bits[k] != 1) {
            throw ArgumentError("nparty_bell_strategy: bits must be 0 or 1");
        }
        (party_bits[k] ? ones : zeros).push_back(k);
        s_value = (s_value << 1) | static_cast<std::size_t>(party_bits[k]);
    }
    // Plus: m* = prod n^{s_k} / prod n^{1-s_k}; minus: m is its reciprocal, unconjugated.
    s.rule = minus ? MRule{false, zeros, ones} : MRule{true, ones, zeros};
    const BasisSet labels_of = generalized_complement_basis(parties, BasisParameter{Complex{1.0, 0.0}});
    const std::size_t offset = minus ? 1 : 0;
    // Plus-states sit at even basis indices equal to their bit string.
    const std::size_t with_input_zero = s_value + offset;
    const std::size_t with_input_one = ((std::size_t{1} << (parties - 1)) | s_value) + offset;
    s.target_outcomes = {labels_of.labels[with_input_zero], labels_of.labels[with_input_one]};
    s.name = labels_of.labels[with_input_zero];
    return s;
}

std::vector<MStrategy> named_strategies(ProtocolKind protocol) {
    if (protocol == ProtocolKind::P1) {
        return {strategy_by_name(protocol, "phi-plus"), strategy_by_name(protocol, "phi-minus"),
                strategy_by_name(protocol, "psi-plus"), strategy_by_name(protocol, "psi-minus")};
    }
    if (protocol == ProtocolKind::P2) {
        return {strategy_by_name(protocol, "ghz-plus"), strategy_by_name(protocol, "ghz-minus"),
                strategy_by_name(protocol, "z-plus"), strategy_by_name(protocol, "z-minus")};
    }
    throw ArgumentError("named_strategies: only p1 and p2 have named strategy sets");
}

BasisParameter choose_m(const MStrategy& strategy, std::span<const Complex> channel) {
    const Complex den = product(channel, strategy.rule.denominator);
    if (std::abs(den) <= kZeroNorm) {
        throw DegenerateChannelError("strategy '" + strategy.name + "' divides by a zero channel weight");
    }
    const Complex value = product(channel, strategy.rule.numerator) / den;
    return BasisParameter(strategy.rule.conjugate ? std::conj(value) : value);
}

bool TableReport::all_passed() const {
    return std::all_of(rows.begin(), rows.end(), [](const RowCheck& r) { return r.passed; });
}

std::vector<std::string> TableReport::failed_rows() const {
    std::vector<std::string> out;
    for (const auto& r : rows) {
        if (!r.passed) {
            out.push_back(r.alice_label + "/" + r.bob_label);
        }
    }
    return out;
}

void require_pass(const TableReport& report) {
    const auto failed = report.failed_rows();
    if (!failed.empty()) {
        std::string msg = "table rows disagree:";
        for (const auto& f : failed) {
            msg += " " + f;
        }
        throw VerificationError(msg);
    }
}

std::array<Complex, 2> table1_final_state(const std::string& alice_label, const InputQubit& input, Complex n,
                                          Complex m) {
    const Complex mc = std::conj(m);
    if (alice_label == "PhiPlus") return scaled(input, 1.0, mc * n);
    if (alice_label == "PhiMinus") return scaled(input, m, n);
    if (alice_label == "PsiPlus") return scaled(input, n, mc);
    if (alice_label == "PsiMinus") return scaled(input, m * n, 1.0);
    throw ArgumentError("not a protocol-1 outcome: " + alice_label);
}

std::array<Complex, 2> table2_final_state(const std::string& alice_label, const InputQubit& input, Complex n1,
                                          Complex n2, Complex m) {
    const Complex mc = std::conj(m);
    if (alice_label == "GHZPlus") return scaled(input, 1.0, mc * n1 * n2);
    if (alice_label == "GHZMinus") return scaled(input, m, n1 * n2);
    if (alice_label == "GPlus") return scaled(input, n1, mc * n2);
    if (alice_label == "GMinus") return scaled(input, m * n1, n2);
    if (alice_label == "HPlus") return scaled(input, mc * n1 * n2, 1.0);
    if (alice_label == "HMinus") return scaled(input, n1 * n2, m);
    if (alice_label == "ZPlus") return scaled(input, mc * n2, n1);
    if (alice_label == "ZMinus") return scaled(input, n2, m * n1);
    throw ArgumentError("not a protocol-2 outcome: " + alice_label);
}

TableReport verify_table1(ChannelParameter n, BasisParameter m, const InputQubit& input, double tolerance,
                          const CorrectionTable& corrections) {
    const auto run = run_protocol1(input, n, m, Receiver::charlie(), corrections);
    return verify_rows(run, tolerance,
                       [&](const std::string& label) { return table1_final_state(label, input, n.n, m.m); });
}

TableReport verify_table2(ChannelParameter n1, ChannelParameter n2, BasisParameter m, const InputQubit& input,
                          double tolerance, const CorrectionTable& corrections) {
    const auto run = run_protocol2(input, n1, n2, m, Receiver::charlie(), corrections);
    return verify_rows(run, tolerance,
                       [&](const std::string& label) { return table2_final_state(label, input, n1.n, n2.n, m.m); });
}

DensityMatrix bob_bit_withheld_state(const ProtocolRun& run, const std::string& alice_label) {
    const BranchRecord* reference = nullptr;
    double total = 0.0;
    for (const auto& b : run.branches) {
        if (b.alice_label != alice_label) {
            continue;
        }
        total += b.probability;
        if (std::all_of(b.helper_labels.begin(), b.helper_labels.end(), [](const auto& h) { return h == kXPlus; })) {
            reference = &b;
        }
    }
    if (reference == nullptr) {
        throw ArgumentError("no branches for outcome '" + alice_label + "'");
    }
    if (std::sqrt(total) <= kZeroNorm) {
        throw ArgumentError("outcome '" + alice_label + "' has zero probability");
    }
    const auto& u = reference->correction.unitary;
    DensityMatrix rho{};
    for (const auto& b : run.branches) {
        if (b.alice_label != alice_label || !b.received_state) {
            continue;
        }
        const auto psi = apply_unitary(*b.received_state, u, 0);
        const double w = b.probability / total;
        for (std::size_t r = 0; r < 2; ++r) {
            for (std::size_t c = 0; c < 2; ++c) {
                rho[r][c] += w * psi[r] * std::conj(psi[c]);
            }
        }
    }
    return rho;
}

BranchRecord apply_bitflip_and_recover(const BranchRecord& branch, const InputQubit& input, bool flip, bool recover) {
    if (!flip || !branch.received_state) {
        return branch;
    }
    BranchRecord out = branch;
    const auto noisy = apply_unitary(*branch.received_state, pauli::x(), 0);
    out.received_state = noisy;
    if (recover) {
        out.correction = correction_from_name(branch.correction.name == "I" ? "X" : branch.correction.name + "X");
    }
    out.receiver_state = apply_unitary(noisy, out.correction.unitary, 0);
    out.fidelity = fidelity(input.state(), *out.receiver_state);
    return out;
}

bool ProtocolConfig::real_parameters() const {
    if (m.imag() != 0.0) {
        return false;
    }
    return std::all_of(channel.begin(), channel.end(), [](const Complex& c) { return c.imag() == 0.0; });
}

ProtocolRun run_protocol(const ProtocolConfig& config, const InputQubit& input) {
    const auto need = [&](std::size_t count) {
        if (config.channel.size() != count) {
            throw ArgumentError(std::string(to_string(config.kind)) + " expects " + std::to_string(count) +
                                " channel parameter(s), got " + std::to_string(config.channel.size()));
        }
    };
    const BasisParameter m(config.m);
    switch (config.kind) {
        case ProtocolKind::P1:
            need(1);
            return run_protocol1(input, ChannelParameter(config.channel[0]), m, config.receiver);
        case ProtocolKind::P2:
            need(2);
            return run_protocol2(input, ChannelParameter(config.channel[0]), ChannelParameter(config.channel[1]), m,
                                 config.receiver);
        case ProtocolKind::NPartyGhz:
            need(1);
            return run_nparty_ghz(input, config.parties, ChannelParameter(config.channel[0]), m, config.receiver);
        case ProtocolKind::NPartyBell: {
            std::vector<ChannelParameter> ch;
            for (const auto& c : config.channel) {
                ch.emplace_back(c);
            }
            return run_nparty_bell(input, ch, m, config.receiver);
        }
    }
    throw ArgumentError("unknown protocol");
}

}  // namespace qsts
