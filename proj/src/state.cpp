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

#include "qsts/state.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace qsts {

namespace {

std::size_t qubits_for_dimension(std::size_t dim) {
    if (dim < 2 || !std::has_single_bit(dim)) {
        throw ArgumentError("amplitude vector length must be a power of two >= 2, got " +
                            std::to_string(dim));
    }
    return static_cast<std::size_t>(std::countr_zero(dim));
}

double sum_norm(std::span<const Complex> amplitudes) {
    double total = 0.0;
    for (const auto& a : amplitudes) {
        total += std::norm(a);
    }
    return total;
}

void require_finite(std::span<const Complex> amplitudes) {
    for (const auto& a : amplitudes) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw ArgumentError("amplitude is not finite");
        }
    }
}

}  // namespace

PureState::PureState(std::vector<Complex> amplitudes)
    : amplitudes_(std::move(amplitudes)), num_qubits_(qubits_for_dimension(amplitudes_.size())) {
    require_finite(amplitudes_);
    const double norm2 = sum_norm(amplitudes_);
    if (std::abs(norm2 - 1.0) > kNormTolerance) {
        throw ArgumentError("state is not normalized (squared norm " + std::to_string(norm2) + ")");
    }
}

double PureState::squared_norm() const noexcept { return sum_norm(amplitudes_); }

InputQubit::InputQubit(Complex a, Complex b) : alpha(a), beta(b) {
    require_finite(std::array{a, b});
    const double norm2 = std::norm(a) + std::norm(b);
    if (std::abs(norm2 - 1.0) > kNormTolerance) {
        throw ArgumentError("input qubit requires |alpha|^2 + |beta|^2 = 1");
    }
}

PureState InputQubit::state() const { return PureState({alpha, beta}); }

SingleQubitUnitary::SingleQubitUnitary(const Matrix& entries) : entries_(entries) {
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) {
            // (U^dagger U)_{rc}
            const Complex v = std::conj(entries_[0][r]) * entries_[0][c] + std::conj(entries_[1][r]) * entries_[1][c];
            const Complex expected = (r == c) ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
            if (std::abs(v - expected) > kIdentityTolerance) {
                throw ArgumentError("matrix is not unitary");
            }
        }
    }
}

SingleQubitUnitary operator*(const SingleQubitUnitary& a, const SingleQubitUnitary& b) {
    SingleQubitUnitary::Matrix out{};
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) {
            out[r][c] = a.entries_[r][0] * b.entries_[0][c] + a.entries_[r][1] * b.entries_[1][c];
        }
    }
    return SingleQubitUnitary(out);
}

SingleQubitUnitary SingleQubitUnitary::adjoint() const {
    SingleQubitUnitary::Matrix out{};
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) {
            out[r][c] = std::conj(entries_[c][r]);
        }
    }
    return SingleQubitUnitary(out);
}

namespace pauli {

const SingleQubitUnitary& identity() {
    static const SingleQubitUnitary u({{{1.0, 0.0}, {0.0, 1.0}}});
    return u;
}

const SingleQubitUnitary& x() {
    static const SingleQubitUnitary u({{{0.0, 1.0}, {1.0, 0.0}}});
    return u;
}

const SingleQubitUnitary& y() {
    static const SingleQubitUnitary u({{{Complex{0.0, 0.0}, Complex{0.0, -1.0}}, {Complex{0.0, 1.0}, Complex{0.0, 0.0}}}});
    return u;
}

const SingleQubitUnitary& z() {
    static const SingleQubitUnitary u({{{1.0, 0.0}, {0.0, -1.0}}});
    return u;
}

}  // namespace pauli

PureState basis_ket(std::size_t num_qubits, std::span<const int> bits) {
    if (num_qubits == 0 || bits.size() != num_qubits) {
        throw ArgumentError("basis_ket: expected " + std::to_string(num_qubits) + " bits, got " +
                            std::to_string(bits.size()));
    }
    std::size_t index = 0;
    for (const int b : bits) {
        if (b != 0 && b != 1) {
            throw ArgumentError("basis_ket: bits must be 0 or 1");
        }
        index = (index << 1) | static_cast<std::size_t>(b);
    }
    std::vector<Complex> amps(std::size_t{1} << num_qubits);
    amps[index] = 1.0;
    return PureState(std::move(amps));
}

PureState basis_ket(std::size_t num_qubits, std::initializer_list<int> bits) {
    return basis_ket(num_qubits, std::span<const int>(bits.begin(), bits.size()));
}

std::vector<int> index_to_bits(std::size_t index, std::size_t num_qubits) {
    std::vector<int> bits(num_qubits);
    for (std::size_t q = 0; q < num_qubits; ++q) {
        bits[q] = static_cast<int>((index >> (num_qubits - 1 - q)) & 1U);
    }
    return bits;
}

PureState tensor(const PureState& a, const PureState& b) {
    const auto da = a.dimension();
    const auto db = b.dimension();
    std::vector<Complex> amps(da * db);
    for (std::size_t i = 0; i < da; ++i) {
        for (std::size_t j = 0; j < db; ++j) {
            amps[i * db + j] = a[i] * b[j];
        }
    }
    return PureState(std::move(amps));
}

Complex inner_product(const PureState& a, const PureState& b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw ArgumentError("inner_product: qubit count mismatch");
    }
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

double fidelity(const PureState& a, const PureState& b) {
    return std::clamp(std::norm(inner_product(a, b)), 0.0, 1.0);
}

PureState apply_unitary(const PureState& state, const SingleQubitUnitary& u, std::size_t target) {
    const auto k = state.num_qubits();
    if (target >= k) {
        throw ArgumentError("apply_unitary: target " + std::to_string(target) + " out of range for " +
                            std::to_string(k) + " qubits");
    }
    const std::size_t stride = std::size_t{1} << (k - 1 - target);
    std::vector<Complex> out(state.amplitudes().begin(), state.amplitudes().end());
    for (std::size_t i = 0; i < out.size(); ++i) {
        if ((i & stride) != 0) {
            continue;
        }
        const Complex a0 = state[i];
        const Complex a1 = state[i | stride];
        out[i] = u(0, 0) * a0 + u(0, 1) * a1;
        out[i | stride] = u(1, 0) * a0 + u(1, 1) * a1;
    }
    return PureState(std::move(out));
}

std::pair<PureState, double> normalize(std::vector<Complex> amplitudes) {
    const auto k = qubits_for_dimension(amplitudes.size());
    require_finite(amplitudes);
    const double norm = std::sqrt(sum_norm(amplitudes));
    if (norm <= kZeroNorm) {
        throw ZeroVectorError("cannot normalize a zero vector");
    }
    for (auto& a : amplitudes) {
        a /= norm;
    }
    return {PureState(std::move(amplitudes), k, PureState::Unchecked{}), norm};
}

}  // namespace qsts
