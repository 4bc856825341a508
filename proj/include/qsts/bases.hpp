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

#include <cstddef>
#include <string>
#include <vector>

#include "qsts/state.hpp"

namespace qsts {

/// Weight m of a measurement basis. Normalization is M = 1/sqrt(1 + |m|^2).
struct BasisParameter {
    Complex m;

    BasisParameter() = default;
    explicit BasisParameter(Complex value);
    [[nodiscard]] double normalization() const;
};

/// Weight n of a partially entangled channel. Normalization is N = 1/sqrt(1 + |n|^2).
struct ChannelParameter {
    Complex n;

    ChannelParameter() = default;
    explicit ChannelParameter(Complex value);
    [[nodiscard]] double normalization() const;
};

/// Ordered, labeled orthonormal basis over `subspace_qubits` qubits.
struct BasisSet {
    std::vector<std::string> labels;
    std::vector<PureState> states;
    std::size_t subspace_qubits = 0;

    [[nodiscard]] std::size_t size() const noexcept { return states.size(); }
    /// Position of `label`; throws ArgumentError when absent.
    [[nodiscard]] std::size_t index_of(const std::string& label) const;
};

/// [PhiPlus, PhiMinus, PsiPlus, PsiMinus].
BasisSet generalized_bell_basis(BasisParameter m);

/// [GHZPlus, GHZMinus, GPlus, GMinus, HPlus, HMinus, ZPlus, ZMinus].
BasisSet generalized_ghz_basis(BasisParameter m);

/**
 * Generalized GHZ-type basis on `num_qubits` >= 2 qubits.
 *
 * For every bit string s whose last bit is 0 (in increasing order of s) the
 * basis holds the pair M(|s> + m|~s>) and M(m*|s> - |~s>), where ~s is the
 * bitwise complement. At three qubits this is exactly generalized_ghz_basis,
 * labels included. For other sizes the labels read "S<bits>Plus" and
 * "S<bits>Minus".
 */
BasisSet generalized_complement_basis(std::size_t num_qubits, BasisParameter m);

/// [XPlus, XMinus].
BasisSet x_basis();

/// N(|000> + n|111>).
PureState channel_ghz(ChannelParameter n);

/// N(|0...0> + n|1...1>) on `num_qubits` >= 2 qubits.
PureState channel_ghz(std::size_t num_qubits, ChannelParameter n);

/// N(|00> + n|11>).
PureState channel_bell(ChannelParameter n);

}  // namespace qsts
