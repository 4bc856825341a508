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
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "qsts/bases.hpp"
#include "qsts/state.hpp"

namespace qsts {

struct MeasurementOutcome {
    std::string label;
    double probability = 0.0;
    /// State of the unmeasured qubits in their original relative order.
    /// Absent when the branch has probability below kZeroNorm.
    std::optional<PureState> post_state;
};

/**
 * Projects `targets` onto every state of `basis` and returns all branches in
 * basis order, zero-probability ones included.
 *
 * The i-th target qubit is matched against the i-th ket symbol of each basis
 * state, so targets need not be contiguous or sorted. Measuring every qubit
 * leaves no residual; that case is rejected.
 */
std::vector<MeasurementOutcome> measure(const PureState& state, std::span<const std::size_t> targets,
                                        const BasisSet& basis);

/// Unnormalized residual (<b| (x) I)|state> on the unmeasured qubits.
std::vector<Complex> project(const PureState& state, std::span<const std::size_t> targets,
                             const PureState& basis_state);

/// Draws one outcome with its stated probability.
const MeasurementOutcome& sample(std::span<const MeasurementOutcome> outcomes, std::mt19937_64& rng);

}  // namespace qsts
