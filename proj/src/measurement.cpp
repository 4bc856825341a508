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

#include "qsts/measurement.hpp"

#include <algorithm>
#include <cmath>

namespace qsts {

namespace {

void validate_targets(std::size_t num_qubits, std::span<const std::size_t> targets) {
    if (targets.empty()) {
        throw ArgumentError("measure: no target qubits");
    }
    if (targets.size() >= num_qubits) {
        throw ArgumentError("measure: at least one qubit must remain unmeasured");
    }
    std::vector<bool> seen(num_qubits, false);
    for (const auto t : targets) {
        if (t >= num_qubits) {
            throw ArgumentError("measure: target " + std::to_string(t) + " out of range");
        }
        if (seen[t]) {
            throw ArgumentError("measure: duplicate target " + std::to_string(t));
        }
        seen[t] = true;
    }
}

// Scatters the bits of `value` (width = positions.size(), MSB first) into the
// given qubit positions of a `num_qubits`-wide index.
std::size_t scatter(std::size_t value, std::span<const std::size_t> positions, std::size_t num_qubits) {
    std::size_t out = 0;
    const std::size_t width = positions.size();
    for (std::size_t i = 0; i < width; ++i) {
        if ((value >> (width - 1 - i)) & 1U) {
            out |= std::size_t{1} << (num_qubits - 1 - positions[i]);
        }
    }
    return out;
}

}  // namespace

std::vector<Complex> project(const PureState& state, std::span<const std::size_t> targets,
                             const PureState& basis_state) {
    const std::size_t k = state.num_qubits();
    validate_targets(k, targets);
    if (basis_state.num_qubits() != targets.size()) {
        throw ArgumentError("measure: basis arity does not match target count");
    }
    std::vector<std::size_t> rest;
    for (std::size_t q = 0; q < k; ++q) {
        if (std::find(targets.begin(), targets.end(), q) == targets.end()) {
            rest.push_back(q);
        }
    }
    const std::size_t target_dim = basis_state.dimension();
    const std::size_t rest_dim = std::size_t{1} << rest.size();

    std::vector<std::size_t> target_offsets(target_dim);
    for (std::size_t t = 0; t < target_dim; ++t) {
        target_offsets[t] = scatter(t, targets, k);
    }
    std::vector<Complex> residual(rest_dim);
    for (std::size_t r = 0; r < rest_dim; ++r) {
        const std::size_t base = scatter(r, rest, k);
        Complex acc{0.0, 0.0};
        for (std::size_t t = 0; t < target_dim; ++t) {
            const Complex b = basis_state[t];
            if (b != Complex{0.0, 0.0}) {
                acc += std::conj(b) * state[base | target_offsets[t]];
            }
        }
        residual[r] = acc;
    }
    return residual;
}

std::vector<MeasurementOutcome> measure(const PureState& state, std::span<const std::size_t> targets,
                                        const BasisSet& basis) {
    validate_targets(state.num_qubits(), targets);
    if (basis.subspace_qubits != targets.size()) {
        throw ArgumentError("measure: basis acts on " + std::to_string(basis.subspace_qubits) +
                            " qubits but " + std::to_string(targets.size()) + " targets were given");
    }
    std::vector<MeasurementOutcome> outcomes;
    outcomes.reserve(basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        auto residual = project(state, targets, basis.states[j]);
        MeasurementOutcome outcome;
        outcome.label = basis.labels[j];
        double norm2 = 0.0;
        for (const auto& a : residual) {
            norm2 += std::norm(a);
        }
        outcome.probability = norm2;
        if (std::sqrt(norm2) > kZeroNorm) {
            outcome.post_state = normalize(std::move(residual)).first;
        }
        outcomes.push_back(std::move(outcome));
    }
    return outcomes;
}

const MeasurementOutcome& sample(std::span<const MeasurementOutcome> outcomes, std::mt19937_64& rng) {
    if (outcomes.empty()) {
        throw ArgumentError("sample: empty outcome list");
    }
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    const double u = uniform(rng);
    double cumulative = 0.0;
    for (const auto& o : outcomes) {
        cumulative += o.probability;
        if (u < cumulative) {
            return o;
        }
    }
    // Roundoff can leave the cumulative sum a hair below 1.
    for (auto it = outcomes.rbegin(); it != outcomes.rend(); ++it) {
        if (it->probability > 0.0) {
            return *it;
        }
    }
    return outcomes.back();
}

}  // namespace qsts
