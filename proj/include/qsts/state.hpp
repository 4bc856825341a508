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
#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qsts {

using Complex = std::complex<double>;

inline constexpr double kNormTolerance = 1e-10;
inline constexpr double kIdentityTolerance = 1e-12;
inline constexpr double kZeroNorm = 1e-14;

class ArgumentError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a vector is too small to normalize; signals a zero-probability branch.
class ZeroVectorError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/**
 * Normalized pure state on `num_qubits` qubits.
 *
 * Qubit 0 is the leftmost symbol of a ket and the most significant bit of the
 * amplitude index, so |011> on three qubits is amplitude 3.
 */
class PureState {
  public:
    /// Takes ownership of `amplitudes`; throws unless the length is a power of
    /// two and the vector has unit norm within kNormTolerance.
    explicit PureState(std::vector<Complex> amplitudes);

    [[nodiscard]] std::size_t num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] std::size_t dimension() const noexcept { return amplitudes_.size(); }
    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
    [[nodiscard]] const Complex& operator[](std::size_t index) const { return amplitudes_[index]; }

    [[nodiscard]] double squared_norm() const noexcept;

  private:
    struct Unchecked {};
    PureState(std::vector<Complex> amplitudes, std::size_t num_qubits, Unchecked) noexcept
        : amplitudes_(std::move(amplitudes)), num_qubits_(num_qubits) {}

    friend std::pair<PureState, double> normalize(std::vector<Complex> amplitudes);

    std::vector<Complex> amplitudes_;
    std::size_t num_qubits_;
};

/// The qubit to be shared, alpha|0> + beta|1>.
struct InputQubit {
    Complex alpha;
    Complex beta;

    /// Throws ArgumentError unless |alpha|^2 + |beta|^2 = 1 within kNormTolerance.
    InputQubit(Complex a, Complex b);

    [[nodiscard]] PureState state() const;
};

/// 2x2 unitary, row-major.
class SingleQubitUnitary {
  public:
    using Matrix = std::array<std::array<Complex, 2>, 2>;

    explicit SingleQubitUnitary(const Matrix& entries);

    [[nodiscard]] const Matrix& entries() const noexcept { return entries_; }
    [[nodiscard]] Complex operator()(std::size_t row, std::size_t col) const { return entries_[row][col]; }

    /// Matrix product; (a * b) applied to a state acts with b first.
    friend SingleQubitUnitary operator*(const SingleQubitUnitary& a, const SingleQubitUnitary& b);

    [[nodiscard]] SingleQubitUnitary adjoint() const;

  private:
    Matrix entries_;
};

namespace pauli {
const SingleQubitUnitary& identity();
const SingleQubitUnitary& x();
const SingleQubitUnitary& y();
const SingleQubitUnitary& z();
}  // namespace pauli

PureState basis_ket(std::size_t num_qubits, std::span<const int> bits);
PureState basis_ket(std::size_t num_qubits, std::initializer_list<int> bits);

/// Decodes an amplitude index into per-qubit bits under the ordering convention.
std::vector<int> index_to_bits(std::size_t index, std::size_t num_qubits);

/// a's qubits take the leading positions.
PureState tensor(const PureState& a, const PureState& b);

/// <a|b>, conjugate-linear in a.
Complex inner_product(const PureState& a, const PureState& b);

double fidelity(const PureState& a, const PureState& b);

PureState apply_unitary(const PureState& state, const SingleQubitUnitary& u, std::size_t target);

/// Returns the unit vector and the original 2-norm. Throws ZeroVectorError when
/// the norm is at most kZeroNorm.
std::pair<PureState, double> normalize(std::vector<Complex> amplitudes);

}  // namespace qsts
