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
#include <cstdint>
#include <optional>
#include <random>

#include "qsts/protocols.hpp"
#include "qsts/state.hpp"

namespace qsts {

/// 2|m| / (1 + m^2).
double concurrence(double m);

/// (2/3)(1 + 2mn / ((1+m^2)(1+n^2))).
double cpro1_analytic(double n, double m);

/// (2/3)(1 + 4 m n1 n2 / ((1+m^2)(1+n1^2)(1+n2^2))).
double cpro2_analytic(double n1, double n2, double m);

/// Uniform (Haar) single-qubit state: cos(theta) uniform on [-1, 1], phase uniform on [0, 2pi).
InputQubit haar_sample(std::mt19937_64& rng);

/// Haar sample conditioned on |alpha| > floor and |beta| > floor.
InputQubit haar_sample_generic(std::mt19937_64& rng, double floor = 0.05);

/// Running mean/variance that merges exactly (Chan et al. pairwise update).
struct MeanAccumulator {
    std::uint64_t count = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x);
    void merge(const MeanAccumulator& other);
    [[nodiscard]] double variance() const;
    [[nodiscard]] double std_error() const;
};

enum class Tally {
    /// Sum over branches of P_j F_j.
    AllBranches,
    /// Sum of P_j over branches with F_j above kSuccessThreshold.
    SuccessOnly,
};

struct EfficiencyReport {
    std::optional<double> analytic;
    double estimate = 0.0;
    std::uint64_t samples = 0;
    double std_error = 0.0;
    std::uint64_t seed = 0;
};

struct MonteCarloOptions {
    /// 0 selects the runtime default.
    int threads = 0;
    Tally tally = Tally::AllBranches;
};

/// Samples are processed in fixed blocks, each with its own generator seeded
/// from (seed, block). Block results merge in block order, so the estimate is
/// bit-identical for any thread count.
inline constexpr std::size_t kSamplesPerBlock = 256;

std::mt19937_64 block_generator(std::uint64_t seed, std::uint64_t block);

/// Closed form for real P1/P2 parameters; empty otherwise.
std::optional<double> cpro_analytic(const ProtocolConfig& config);

/// Haar average of the exact per-input branch sum. OpenMP over blocks.
EfficiencyReport cpro_monte_carlo(const ProtocolConfig& config, std::uint64_t samples, std::uint64_t seed,
                                  const MonteCarloOptions& options = {});

/// Single-threaded reference with the same block decomposition.
EfficiencyReport cpro_monte_carlo_serial(const ProtocolConfig& config, std::uint64_t samples, std::uint64_t seed,
                                         Tally tally = Tally::AllBranches);

struct ComparisonReport {
    double c1 = 0.0;
    /// Second protocol with (n1, n2) = (n, n_other).
    double c2_other_second = 0.0;
    /// Second protocol with (n1, n2) = (n_other, n).
    double c2_other_first = 0.0;
    bool first_at_least_second = false;
    /// Equality is expected iff c(n_other) = 1 or c(m) c(n) = 0.
    bool equality_expected = false;
    bool equal = false;
};

ComparisonReport compare_protocols(double n, double m, double n_other, double tolerance = 1e-12);

/// Thread count from QSTS_THREADS (0 or unset means runtime default).
int threads_from_env();

}  // namespace qsts
