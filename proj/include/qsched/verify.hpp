// Copyright 2026 The qsched Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * Exhaustive and randomized self-checks of the schedulers: reduced-to-global
 * mapping against the brute-force active set, and baseline vs. optimized
 * final states.
 */
#pragma once

#include "core.hpp"
#include "sched.hpp"

#include <cstdint>
#include <functional>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace qsched {

/// Haar-agnostic random unitary e^{ia} Rz(b) Ry(c) Rz(d).
template <typename Rng> GateMatrix random_unitary(Rng &rng) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    const double alpha = angle(rng), beta = angle(rng), gamma = angle(rng),
                 delta = angle(rng);
    const auto phase = [](double x) { return std::polar(1.0, x); };
    const double cg = std::cos(gamma / 2), sg = std::sin(gamma / 2);
    return {phase(alpha - beta / 2 - delta / 2) * cg,
            -phase(alpha - beta / 2 + delta / 2) * sg,
            phase(alpha + beta / 2 - delta / 2) * sg,
            phase(alpha + beta / 2 + delta / 2) * cg};
}

template <typename Real, typename Rng>
StateVector<Real> random_state(unsigned n, Rng &rng) {
    std::normal_distribution<double> gauss;
    std::vector<std::complex<Real>> amps(pow2(n));
    double norm = 0.0;
    for (auto &a : amps) {
        const std::complex<double> v{gauss(rng), gauss(rng)};
        norm += std::norm(v);
        a = static_cast<std::complex<Real>>(v);
    }
    const Real scale = static_cast<Real>(1.0 / std::sqrt(norm));
    for (auto &a : amps) {
        a *= scale;
    }
    return StateVector<Real>::from_amplitudes(std::move(amps));
}

/// Random control subset of size num_controls, excluding target.
template <typename Rng>
std::vector<Qubit> random_controls(unsigned n, Qubit target, unsigned num_controls,
                                   Rng &rng) {
    std::vector<Qubit> pool;
    for (Qubit q = 0; q < n; ++q) {
        if (q != target) {
            pool.push_back(q);
        }
    }
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(num_controls);
    return pool;
}

/// Random unitaries on random targets with uniformly drawn control counts.
template <typename Rng>
Circuit random_circuit(unsigned n, std::size_t num_gates, Rng &rng) {
    Circuit circuit(n);
    std::uniform_int_distribution<Qubit> pick_target(0, n - 1);
    std::uniform_int_distribution<unsigned> pick_count(0, n - 1);
    for (std::size_t g = 0; g < num_gates; ++g) {
        const Qubit t = pick_target(rng);
        const unsigned nc = pick_count(rng);
        circuit.add(GateOp(random_unitary(rng), t, random_controls(n, t, nc, rng)));
    }
    return circuit;
}

struct Geometry {
    unsigned num_qubits;
    Qubit target;
    std::vector<Qubit> controls;
};

inline std::string to_string(const Geometry &g) {
    std::ostringstream out;
    out << "(n=" << g.num_qubits << ", t=" << g.target << ", C={";
    for (std::size_t k = 0; k < g.controls.size(); ++k) {
        out << (k ? "," : "") << g.controls[k];
    }
    out << "})";
    return out.str();
}

/**
 * @brief Calls fn for every n in [n_min, n_max], every target and every
 * ascending control subset (including the empty one), in that nesting
 * order. Stops early when fn returns false.
 */
template <typename Fn> void for_each_geometry(unsigned n_min, unsigned n_max, Fn &&fn) {
    for (unsigned n = n_min; n <= n_max; ++n) {
        for (Qubit t = 0; t < n; ++t) {
            for (Index mask = 0; mask < pow2(n - 1); ++mask) {
                Geometry g{n, t, {}};
                for (Qubit bit = 0; bit < n - 1; ++bit) {
                    if ((mask >> bit) & 1U) {
                        g.controls.push_back(bit < t ? bit : bit + 1);
                    }
                }
                if (!fn(g)) {
                    return;
                }
            }
        }
    }
}

using MappingFn = std::function<Index(Index, Qubit, std::span<const Qubit>)>;

inline Index default_mapping(Index i_r, Qubit t, std::span<const Qubit> controls) {
    return reduced_to_global(i_r, t, controls);
}

struct MappingReport {
    std::size_t geometries = 0;
    std::optional<Geometry> first_failure;
};

/// Image of the reduced set under `mapping` must equal the brute-force
/// active set, in order, for every geometry with n in [2, n_max].
inline MappingReport verify_mapping(unsigned n_max,
                                    const MappingFn &mapping = default_mapping) {
    MappingReport report;
    for_each_geometry(2, n_max, [&](const Geometry &g) {
        ++report.geometries;
        const auto expected = active_set_oracle(g.num_qubits, g.target, g.controls);
        const Index count = executed_iteration_count(Strategy::Optimized, g.num_qubits,
                                                     g.controls.size());
        bool ok = expected.size() == count;
        for (Index i_r = 0; ok && i_r < count; ++i_r) {
            ok = mapping(i_r, g.target, g.controls) == expected[i_r];
        }
        if (!ok) {
            report.first_failure = g;
        }
        return ok;
    });
    return report;
}

struct EquivalenceReport {
    std::size_t cases = 0;
    std::size_t bit_exact = 0;
    double max_abs_diff = 0.0;
    std::optional<std::string> first_failure;
};

namespace detail {
template <typename Real>
double state_diff(const StateVector<Real> &lhs, const StateVector<Real> &rhs) {
    double worst = 0.0;
    for (Index k = 0; k < lhs.size(); ++k) {
        worst = std::max(worst, static_cast<double>(std::abs(lhs[k] - rhs[k])));
    }
    return worst;
}

inline void record(EquivalenceReport &report, double diff, bool exact, double tol,
                   const std::string &label) {
    ++report.cases;
    report.bit_exact += exact ? 1 : 0;
    report.max_abs_diff = std::max(report.max_abs_diff, diff);
    if (diff > tol && !report.first_failure) {
        report.first_failure = label;
    }
}
} // namespace detail

/// Every geometry for n in [2, n_max], one random unitary on one random
/// state each, baseline vs. optimized.
inline EquivalenceReport verify_geometry_equivalence(unsigned n_max, std::uint64_t seed,
                                                     double tol = 1e-12) {
    EquivalenceReport report;
    std::mt19937_64 rng(seed);
    for_each_geometry(2, n_max, [&](const Geometry &g) {
        const GateOp gate(random_unitary(rng), g.target, g.controls);
        auto base = random_state<double>(g.num_qubits, rng);
        auto opt = base;
        baseline_apply(base, gate);
        optimized_apply(opt, gate);
        detail::record(report, detail::state_diff(base, opt), base == opt, tol,
                       to_string(g));
        return true;
    });
    return report;
}

/// `cases` random circuits with n drawn from [1, n_max], each run from a
/// random state under both schedulers.
inline EquivalenceReport verify_random_circuits(std::size_t cases, unsigned n_max,
                                                std::uint64_t seed, double tol = 1e-12,
                                                std::size_t gates_per_circuit = 16) {
    EquivalenceReport report;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<unsigned> pick_n(1, n_max);
    for (std::size_t k = 0; k < cases; ++k) {
        const unsigned n = pick_n(rng);
        const Circuit circuit = random_circuit(n, gates_per_circuit, rng);
        auto base = random_state<double>(n, rng);
        auto opt = base;
        run_circuit(base, circuit, Strategy::Baseline);
        run_circuit(opt, circuit, Strategy::Optimized);
        detail::record(report, detail::state_diff(base, opt), base == opt, tol,
                       "circuit #" + std::to_string(k) + " (n=" + std::to_string(n) + ")");
    }
    return report;
}

} // namespace qsched
