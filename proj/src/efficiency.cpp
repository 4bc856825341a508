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

#include "qsts/efficiency.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qsts {

namespace {

double tally_run(const ProtocolRun& run, Tally tally) {
    return tally == Tally::AllBranches ? run.weighted_fidelity() : run.success_probability;
}

MeanAccumulator run_block(const ProtocolConfig& config, std::uint64_t samples, std::uint64_t seed,
                          std::uint64_t block, Tally tally) {
    const std::uint64_t begin = block * kSamplesPerBlock;
    const std::uint64_t end = std::min<std::uint64_t>(samples, begin + kSamplesPerBlock);
    auto rng = block_generator(seed, block);
    MeanAccumulator acc;
    for (std::uint64_t i = begin; i < end; ++i) {
        acc.add(tally_run(run_protocol(config, haar_sample(rng)), tally));
    }
    return acc;
}

// 2x / (1 + x^2); factors are sorted before multiplying so the result is
// exactly symmetric in its arguments.
double signed_concurrence(double x) { return 2.0 * x / (1.0 + x * x); }

std::uint64_t block_count(std::uint64_t samples) { return (samples + kSamplesPerBlock - 1) / kSamplesPerBlock; }

EfficiencyReport make_report(const ProtocolConfig& config, const std::vector<MeanAccumulator>& blocks,
                             std::uint64_t samples, std::uint64_t seed) {
    MeanAccumulator total;
    for (const auto& b : blocks) {
        total.merge(b);
    }
    EfficiencyReport report;
    report.analytic = cpro_analytic(config);
    report.estimate = total.mean;
    report.samples = samples;
    report.std_error = total.std_error();
    report.seed = seed;
    return report;
}

void require_samples(std::uint64_t samples) {
    if (samples == 0) {
        throw ArgumentError("cpro_monte_carlo: samples must be >= 1");
    }
}

}  // namespace

double concurrence(double m) { return 2.0 * std::abs(m) / (1.0 + m * m); }

double cpro1_analytic(double n, double m) {
    const double a = signed_concurrence(n);
    const double b = signed_concurrence(m);
    return (2.0 / 3.0) * (1.0 + std::min(a, b) * std::max(a, b) / 2.0);
}

double cpro2_analytic(double n1, double n2, double m) {
    std::array<double, 3> c{signed_concurrence(n1), signed_concurrence(n2), signed_concurrence(m)};
    std::sort(c.begin(), c.end());
    return (2.0 / 3.0) * (1.0 + c[0] * c[1] * c[2] / 2.0);
}

InputQubit haar_sample(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> cos_dist(-1.0, 1.0);
    std::uniform_real_distribution<double> phase_dist(0.0, 2.0 * std::numbers::pi);
    const double c = cos_dist(rng);
    const double phi = phase_dist(rng);
    const double a = std::sqrt(std::max(0.0, (1.0 + c) / 2.0));
    const double b = std::sqrt(std::max(0.0, (1.0 - c) / 2.0));
    return {Complex{a, 0.0}, std::polar(b, phi)};
}

InputQubit haar_sample_generic(std::mt19937_64& rng, double floor) {
    for (;;) {
        auto q = haar_sample(rng);
        if (std::abs(q.alpha) > floor && std::abs(q.beta) > floor) {
            return q;
        }
    }
}

void MeanAccumulator::add(double x) {
    ++count;
    const double delta = x - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (x - mean);
}

void MeanAccumulator::merge(const MeanAccumulator& other) {
    if (other.count == 0) {
        return;
    }
    if (count == 0) {
        *this = other;
        return;
    }
    const double na = static_cast<double>(count);
    const double nb = static_cast<double>(other.count);
    const double n = na + nb;
    const double delta = other.mean - mean;
    mean += delta * nb / n;
    m2 += other.m2 + delta * delta * na * nb / n;
    count += other.count;
}

double MeanAccumulator::variance() const { return count > 1 ? m2 / static_cast<double>(count - 1) : 0.0; }

double MeanAccumulator::std_error() const {
    return count > 0 ? std::sqrt(variance() / static_cast<double>(count)) : 0.0;
}

std::mt19937_64 block_generator(std::uint64_t seed, std::uint64_t block) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32)};
    return std::mt19937_64(seq);
}

std::optional<double> cpro_analytic(const ProtocolConfig& config) {
    if (!config.real_parameters()) {
        return std::nullopt;
    }
    const double m = config.m.real();
    if (config.kind == ProtocolKind::P1 && config.channel.size() == 1) {
        return cpro1_analytic(config.channel[0].real(), m);
    }
    if (config.kind == ProtocolKind::P2 && config.channel.size() == 2) {
        return cpro2_analytic(config.channel[0].real(), config.channel[1].real(), m);
    }
    return std::nullopt;
}

EfficiencyReport cpro_monte_carlo_serial(const ProtocolConfig& config, std::uint64_t samples, std::uint64_t seed,
                                         Tally tally) {
    require_samples(samples);
    const auto blocks = block_count(samples);
    std::vector<MeanAccumulator> partial(blocks);
    for (std::uint64_t b = 0; b < blocks; ++b) {
        partial[b] = run_block(config, samples, seed, b, tally);
    }
    return make_report(config, partial, samples, seed);
}

EfficiencyReport cpro_monte_carlo(const ProtocolConfig& config, std::uint64_t samples, std::uint64_t seed,
                                  const MonteCarloOptions& options) {
    require_samples(samples);
    // Validate once up front; exceptions must not escape the parallel region.
    (void)run_protocol(config, InputQubit{1.0, 0.0});
    const auto blocks = static_cast<std::int64_t>(block_count(samples));
    std::vector<MeanAccumulator> partial(static_cast<std::size_t>(blocks));
#ifdef _OPENMP
    const int threads = options.threads > 0 ? options.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
#endif
    for (std::int64_t b = 0; b < blocks; ++b) {
        partial[static_cast<std::size_t>(b)] =
            run_block(config, samples, seed, static_cast<std::uint64_t>(b), options.tally);
    }
    return make_report(config, partial, samples, seed);
}

ComparisonReport compare_protocols(double n, double m, double n_other, double tolerance) {
    ComparisonReport r;
    r.c1 = cpro1_analytic(n, m);
    r.c2_other_second = cpro2_analytic(n, n_other, m);
    r.c2_other_first = cpro2_analytic(n_other, n, m);
    r.first_at_least_second = r.c1 >= r.c2_other_second - tolerance && r.c1 >= r.c2_other_first - tolerance;
    r.equality_expected = std::abs(concurrence(n_other) - 1.0) <= tolerance ||
                          std::abs(concurrence(m) * concurrence(n)) <= tolerance;
    r.equal = std::abs(r.c1 - r.c2_other_second) <= tolerance;
    return r;
}

int threads_from_env() {
    const char* raw = std::getenv("QSTS_THREADS");
    if (raw == nullptr || *raw == '\0') {
        return 0;
    }
    try {
        const int v = std::stoi(raw);
        return v < 0 ? 0 : v;
    } catch (const std::exception&) {
        throw ArgumentError(std::string("QSTS_THREADS is not an integer: ") + raw);
    }
}

}  // namespace qsts
