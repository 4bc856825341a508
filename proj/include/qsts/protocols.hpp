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

#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qsts/bases.hpp"
#include "qsts/state.hpp"

namespace qsts {

enum class ProtocolKind { P1, P2, NPartyGhz, NPartyBell };

std::string_view to_string(ProtocolKind kind);
ProtocolKind protocol_from_string(std::string_view name);

/// Raised when a strategy rule would divide by a zero channel weight.
class DegenerateChannelError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Receiving party, counted 1..N-1 among the non-Alice parties (Bob = 1, Charlie = 2).
struct Receiver {
    std::size_t party = 2;

    static constexpr Receiver bob() { return {1}; }
    static constexpr Receiver charlie() { return {2}; }
    friend bool operator==(const Receiver&, const Receiver&) = default;
};

std::string receiver_name(Receiver r, ProtocolKind kind);

/// Pauli correction. `name` spells the operator product left to right, so
/// "ZX" is sigma_z sigma_x (sigma_x acts first).
struct Correction {
    std::string name;
    SingleQubitUnitary unitary;
};

Correction correction_from_name(std::string_view name);

/// (Alice label, Bob label) -> Charlie's correction.
class CorrectionTable {
  public:
    using Key = std::pair<std::string, std::string>;

    CorrectionTable() = default;
    explicit CorrectionTable(std::map<Key, std::string> entries);

    [[nodiscard]] const Correction& at(const std::string& alice, const std::string& bob) const;
    [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
    [[nodiscard]] std::vector<Key> keys() const;

    /// Returns a copy with one entry replaced; used for negative controls.
    [[nodiscard]] CorrectionTable with_entry(const std::string& alice, const std::string& bob,
                                             std::string_view correction) const;

  private:
    std::map<Key, Correction> entries_;
};

const CorrectionTable& table1_corrections();
const CorrectionTable& table2_corrections();

struct BranchRecord {
    std::string alice_label;
    std::vector<std::string> helper_labels;
    double probability = 0.0;
    Correction correction = correction_from_name("I");
    /// Receiver's qubit before and after the correction; absent for zero-probability branches.
    std::optional<PureState> received_state;
    std::optional<PureState> receiver_state;
    /// Fidelity with the input; 0 for zero-probability branches.
    double fidelity = 0.0;
};

struct ClassicalBits {
    std::size_t alice = 0;
    std::size_t per_helper = 1;
    std::size_t helpers = 0;
    [[nodiscard]] std::size_t total() const noexcept { return alice + per_helper * helpers; }
};

inline constexpr double kSuccessThreshold = 1.0 - 1e-9;

struct ProtocolRun {
    ProtocolKind protocol = ProtocolKind::P1;
    InputQubit input{1.0, 0.0};
    /// n for P1 and the GHZ runner; (n1, n2) for P2; n_1..n_{N-1} for the Bell runner.
    std::vector<Complex> channel;
    std::size_t parties = 3;
    Complex m;
    Receiver receiver;
    std::vector<BranchRecord> branches;
    double success_probability = 0.0;
    ClassicalBits classical_bits;

    [[nodiscard]] double total_probability() const;
    /// Sum over branches of probability times fidelity.
    [[nodiscard]] double weighted_fidelity() const;
};

ProtocolRun run_protocol1(const InputQubit& input, ChannelParameter n, BasisParameter m,
                          Receiver receiver = Receiver::charlie());
ProtocolRun run_protocol1(const InputQubit& input, ChannelParameter n, BasisParameter m, Receiver receiver,
                          const CorrectionTable& corrections);

/// Receiver Bob is handled by exchanging the roles of (n1, Bob) and (n2, Charlie).
ProtocolRun run_protocol2(const InputQubit& input, ChannelParameter n1, ChannelParameter n2, BasisParameter m,
                          Receiver receiver = Receiver::charlie());
ProtocolRun run_protocol2(const InputQubit& input, ChannelParameter n1, ChannelParameter n2, BasisParameter m,
                          Receiver receiver, const CorrectionTable& corrections);

/// GHZ channel over `parties` qubits (Alice plus parties-1 others), 3 <= parties <= 10.
ProtocolRun run_nparty_ghz(const InputQubit& input, std::size_t parties, ChannelParameter n, BasisParameter m,
                           Receiver receiver);

/// One Bell channel n_k per party; parties = channel.size() + 1 in [3, 6].
ProtocolRun run_nparty_bell(const InputQubit& input, std::span<const ChannelParameter> channel, BasisParameter m,
                            Receiver receiver);

/// Algebraic assignment m = f or m* = f with f a ratio of channel-weight products.
struct MRule {
    bool conjugate = false;
    std::vector<std::size_t> numerator;
    std::vector<std::size_t> denominator;
};

struct MStrategy {
    ProtocolKind protocol = ProtocolKind::P1;
    std::string name;
    /// Outcomes that reach unit fidelity for any complex channel.
    std::vector<std::string> target_outcomes;
    /// Additional outcomes that also reach unit fidelity when all weights are real.
    std::vector<std::string> real_partner_outcomes;
    MRule rule;

    [[nodiscard]] std::vector<std::string> targets(bool real_parameters) const;
};

/**
 * Strategy by name. P1 and the GHZ runner accept phi-plus, phi-minus,
 * psi-plus, psi-minus. P2 accepts ghz-*, g-*, h-*, z-* with * = plus|minus.
 * The Bell runner accepts the P2 names at three parties and ghz-* / h-*
 * for more parties.
 */
MStrategy strategy_by_name(ProtocolKind protocol, std::string_view name, std::size_t parties = 3);

/// The four distinct rules for P1 or P2.
std::vector<MStrategy> named_strategies(ProtocolKind protocol);

/**
 * Bell-runner strategy selected by the receivers' bit pattern of Alice's
 * outcome string: `party_bits[k-1]` is the bit Alice's plus-state assigns to
 * party k. Targets both outcome strings with that pattern.
 */
MStrategy nparty_bell_strategy(std::span<const int> party_bits, bool minus);

/// Throws DegenerateChannelError on a zero denominator.
BasisParameter choose_m(const MStrategy& strategy, std::span<const Complex> channel);

struct RowCheck {
    std::string alice_label;
    std::string bob_label;
    std::string correction;
    double probability = 0.0;
    double fidelity = 0.0;
    bool passed = false;
};

struct TableReport {
    std::vector<RowCheck> rows;
    [[nodiscard]] bool all_passed() const;
    [[nodiscard]] std::vector<std::string> failed_rows() const;
};

/// Raised by require_pass when a row disagrees with the table.
class VerificationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

void require_pass(const TableReport& report);

/// Compares each corrected branch with the protocol-1 table's final state (receiver Charlie).
TableReport verify_table1(ChannelParameter n, BasisParameter m, const InputQubit& input, double tolerance = 1e-10,
                          const CorrectionTable& corrections = table1_corrections());

TableReport verify_table2(ChannelParameter n1, ChannelParameter n2, BasisParameter m, const InputQubit& input,
                          double tolerance = 1e-10, const CorrectionTable& corrections = table2_corrections());

/// Unnormalized final states (coefficients of |0>, |1>) as listed in the tables.
std::array<Complex, 2> table1_final_state(const std::string& alice_label, const InputQubit& input, Complex n,
                                          Complex m);
std::array<Complex, 2> table2_final_state(const std::string& alice_label, const InputQubit& input, Complex n1,
                                          Complex n2, Complex m);

using DensityMatrix = std::array<std::array<Complex, 2>, 2>;

/// Receiver's state when the helpers' bits are withheld: the receiver applies
/// the all-XPlus correction and the helper outcomes are averaged out.
DensityMatrix bob_bit_withheld_state(const ProtocolRun& run, const std::string& alice_label);

/// Bit-flip noise on the receiver's qubit ahead of the correction. With
/// `recover`, an extra sigma_x is appended to the correction.
BranchRecord apply_bitflip_and_recover(const BranchRecord& branch, const InputQubit& input, bool flip,
                                       bool recover = true);

struct ProtocolConfig {
    ProtocolKind kind = ProtocolKind::P1;
    std::vector<Complex> channel;
    Complex m;
    /// Used by the N-party runners only.
    std::size_t parties = 3;
    Receiver receiver = Receiver::charlie();

    [[nodiscard]] bool real_parameters() const;
};

ProtocolRun run_protocol(const ProtocolConfig& config, const InputQubit& input);

}  // namespace qsts
