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

#include "qsts/bases.hpp"

#include <cmath>
#include <numbers>

namespace qsts {

namespace {

Complex require_finite(Complex value, const char* what) {
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
        throw ArgumentError(std::string(what) + " must be finite");
    }
    return value;
}

std::string bit_string(std::size_t value, std::size_t width) {
    std::string out(width, '0');
    for (std::size_t q = 0; q < width; ++q) {
        if ((value >> (width - 1 - q)) & 1U) {
            out[q] = '1';
        }
    }
    return out;
}

// Builds the "plus" and "minus" members of the pair over basis indices (s, ~s).
std::pair<PureState, PureState> complement_pair(std::size_t dim, std::size_t s, Complex m, double norm) {
    const std::size_t sbar = (dim - 1) ^ s;
    std::vector<Complex> plus(dim);
    std::vector<Complex> minus(dim);
    plus[s] = norm;
    plus[sbar] = norm * m;
    minus[s] = norm * std::conj(m);
    minus[sbar] = -norm;
    return {PureState(std::move(plus)), PureState(std::move(minus))};
}

}  // namespace

BasisParameter::BasisParameter(Complex value) : m(require_finite(value, "basis parameter m")) {}

double BasisParameter::normalization() const { return 1.0 / std::sqrt(1.0 + std::norm(m)); }

ChannelParameter::ChannelParameter(Complex value) : n(require_finite(value, "channel parameter n")) {}

double ChannelParameter::normalization() const { return 1.0 / std::sqrt(1.0 + std::norm(n)); }

std::size_t BasisSet::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] == label) {
            return i;
        }
    }
    throw ArgumentError("unknown outcome label '" + label + "'");
}

BasisSet generalized_bell_basis(BasisParameter m) {
    const double norm = m.normalization();
    BasisSet basis;
    basis.subspace_qubits = 2;
    basis.labels = {"PhiPlus", "PhiMinus", "PsiPlus", "PsiMinus"};
    // Phi pairs |00>,|11>; Psi pairs |01>,|10>.
    for (const std::size_t s : {std::size_t{0}, std::size_t{1}}) {
        auto [plus, minus] = complement_pair(4, s, m.m, norm);
        basis.states.push_back(std::move(plus));
        basis.states.push_back(std::move(minus));
    }
    return basis;
}

BasisSet generalized_complement_basis(std::size_t num_qubits, BasisParameter m) {
    if (num_qubits < 2 || num_qubits > 12) {
        throw ArgumentError("generalized_complement_basis: qubit count must be in [2, 12]");
    }
    const std::size_t dim = std::size_t{1} << num_qubits;
    const double norm = m.normalization();
    BasisSet basis;
    basis.subspace_qubits = num_qubits;
    for (std::size_t s = 0; s < dim; s += 2) {
        auto [plus, minus] = complement_pair(dim, s, m.m, norm);
        basis.states.push_back(std::move(plus));
        basis.states.push_back(std::move(minus));
        if (num_qubits == 3) {
            static constexpr const char* kNames[] = {"GHZ", "G", "H", "Z"};
            const std::string stem = kNames[s / 2];
            basis.labels.push_back(stem + "Plus");
            basis.labels.push_back(stem + "Minus");
        } else {
            const std::string stem = "S" + bit_string(s, num_qubits);
            basis.labels.push_back(stem + "Plus");
            basis.labels.push_back(stem + "Minus");
        }
    }
    return basis;
}

BasisSet generalized_ghz_basis(BasisParameter m) { return generalized_complement_basis(3, m); }

BasisSet x_basis() {
    const double h = 1.0 / std::numbers::sqrt2;
    BasisSet basis;
    basis.subspace_qubits = 1;
    basis.labels = {"XPlus", "XMinus"};
    basis.states.emplace_back(std::vector<Complex>{h, h});
    basis.states.emplace_back(std::vector<Complex>{h, -h});
    return basis;
}

PureState channel_ghz(std::size_t num_qubits, ChannelParameter n) {
    if (num_qubits < 2 || num_qubits > 12) {
        throw ArgumentError("channel_ghz: qubit count must be in [2, 12]");
    }
    const std::size_t dim = std::size_t{1} << num_qubits;
    const double norm = n.normalization();
    std::vector<Complex> amps(dim);
    amps.front() = norm;
    amps.back() = norm * n.n;
    return PureState(std::move(amps));
}

PureState channel_ghz(ChannelParameter n) { return channel_ghz(3, n); }

PureState channel_bell(ChannelParameter n) { return channel_ghz(2, n); }

}  // namespace qsts
