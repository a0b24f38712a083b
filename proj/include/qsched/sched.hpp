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
 * Iteration schedulers for controlled single-qubit gates.
 *
 * A gate on target t over n qubits touches 2^(n-1) amplitude pairs, one per
 * global iteration index i in [0, 2^(n-1)). The baseline scheduler visits
 * every pair and tests each control bit. The optimized scheduler visits only
 * the 2^(n-n_c-1) pairs whose controls are all set, by mapping a reduced
 * iteration index back to its global index one control at a time.
 */
#pragma once

#include "core.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qsched {

enum class Strategy { Baseline, Optimized };

inline const char *to_string(Strategy s) {
    return s == Strategy::Baseline ? "baseline" : "optimized";
}

struct ExecPolicy {
    /// Worker threads; 0 uses the OpenMP default.
    int threads = 0;
    /// Baseline evaluates every control instead of stopping at the first miss.
    bool instrumented_baseline = false;
};

/// Below this many iterations a gate runs on the calling thread.
inline constexpr Index kParallelThreshold = Index{1} << 14;

/// Inserts a zero bit at position t of i.
constexpr Index ith_cleared(Index i, Qubit t) {
    return ((i >> t) << (t + 1)) | (i & (pow2(t) - 1));
}

struct PairIndices {
    Index first;
    Index second;
    friend bool operator==(const PairIndices &, const PairIndices &) = default;
};

constexpr PairIndices pair_indices(Index i, Qubit t) {
    const Index p1 = ith_cleared(i, t);
    return {p1, p1 + pow2(t)};
}

constexpr bool control_satisfied(Index p1, Qubit c) { return ((p1 >> c) & 1U) != 0; }

/// Control index re-based to the iteration index, which lacks bit t.
constexpr Qubit adjusted_control(Qubit c, Qubit t) { return c > t ? c - 1 : c; }

struct SkipStep {
    Qubit adjusted_control;
    Index skip_interval;
};

namespace detail {
inline void check_controls(Qubit t, std::span<const Qubit> controls) {
    for (std::size_t k = 0; k < controls.size(); ++k) {
        if (controls[k] == t) {
            throw GeometryError("control equals target " + std::to_string(t));
        }
        if (k > 0 && controls[k - 1] >= controls[k]) {
            throw GeometryError("controls must be strictly ascending");
        }
    }
}
} // namespace detail

/// One SkipStep per control, in ascending control order.
inline std::vector<SkipStep> skip_steps(Qubit t, std::span<const Qubit> controls) {
    detail::check_controls(t, controls);
    std::vector<SkipStep> steps;
    steps.reserve(controls.size());
    for (const Qubit c : controls) {
        const Qubit adj = adjusted_control(c, t);
        steps.push_back({adj, pow2(adj)});
    }
    return steps;
}

/// i <- i + (floor(i / 2^c_adj) + 1) * 2^c_adj for each step in order.
inline Index reduced_to_global(Index i_r, std::span<const SkipStep> steps) {
    Index i = i_r;
    for (const SkipStep &s : steps) {
        i += ((i >> s.adjusted_control) + 1) << s.adjusted_control;
    }
    return i;
}

inline Index reduced_to_global(Index i_r, Qubit t, std::span<const Qubit> controls) {
    const auto steps = skip_steps(t, controls);
    return reduced_to_global(i_r, steps);
}

/// Global iterations whose first pair element satisfies every control,
/// found by testing all 2^(n-1) of them.
inline std::vector<Index> active_set_oracle(unsigned n, Qubit t,
                                            std::span<const Qubit> controls) {
    std::vector<Index> active;
    for (Index i = 0; i < pow2(n - 1); ++i) {
        const Index p1 = ith_cleared(i, t);
        bool perform = true;
        for (const Qubit c : controls) {
            perform = perform && control_satisfied(p1, c);
        }
        if (perform) {
            active.push_back(i);
        }
    }
    return active;
}

constexpr Index executed_iteration_count(Strategy strategy, unsigned n,
                                         std::size_t num_controls) {
    return strategy == Strategy::Baseline
               ? pow2(n - 1)
               : pow2(n - static_cast<unsigned>(num_controls) - 1);
}

struct IterationPlan {
    Strategy strategy;
    unsigned num_qubits;
    Qubit target;
    std::vector<Qubit> controls;
    Index count;
};

inline IterationPlan make_plan(Strategy strategy, unsigned n, const GateOp &gate) {
    gate.validate(n);
    if (gate.num_controls() > n - 1) {
        throw GeometryError("more controls than non-target qubits");
    }
    return {strategy,
            n,
            gate.target(),
            {gate.controls().begin(), gate.controls().end()},
            executed_iteration_count(strategy, n, gate.num_controls())};
}

inline Index executed_iteration_count(const IterationPlan &plan) {
    return executed_iteration_count(plan.strategy, plan.num_qubits,
                                    plan.controls.size());
}

namespace detail {

inline int resolve_threads(const ExecPolicy &policy) {
#ifdef _OPENMP
    return policy.threads > 0 ? policy.threads : omp_get_max_threads();
#else
    (void)policy;
    return 1;
#endif
}

template <typename Real>
void baseline_range(std::complex<Real> *amps, const PairKernel<Real> &kernel,
                    Qubit t, std::span<const Qubit> controls, bool instrumented,
                    std::int64_t begin, std::int64_t end, int threads) {
    const Index stride = pow2(t);
    const std::size_t nc = controls.size();
    const Qubit *ctl = controls.data();
#pragma omp parallel for schedule(static) num_threads(threads) if (threads > 1)
    for (std::int64_t i = begin; i < end; ++i) {
        const Index p1 = ith_cleared(static_cast<Index>(i), t);
        bool perform = true;
        if (instrumented) {
            for (std::size_t k = 0; k < nc; ++k) {
                perform &= control_satisfied(p1, ctl[k]);
            }
        } else {
            for (std::size_t k = 0; k < nc && perform; ++k) {
                perform = control_satisfied(p1, ctl[k]);
            }
        }
        if (perform) {
            kernel(amps, p1, p1 + stride);
        }
    }
}

template <typename Real>
void optimized_range(std::complex<Real> *amps, const PairKernel<Real> &kernel,
                     Qubit t, std::span<const SkipStep> steps, std::int64_t begin,
                     std::int64_t end, int threads) {
    const Index stride = pow2(t);
#pragma omp parallel for schedule(static) num_threads(threads) if (threads > 1)
    for (std::int64_t i = begin; i < end; ++i) {
        const Index p1 = ith_cleared(reduced_to_global(static_cast<Index>(i), steps), t);
        kernel(amps, p1, p1 + stride);
    }
}

inline void check_range(Index begin, Index end, Index count) {
    if (begin > end || end > count) {
        throw std::out_of_range("iteration range outside the scheduled set");
    }
}

} // namespace detail

/**
 * @brief Runs iterations [begin, end) of the strategy's iteration set for one
 * gate on the calling thread.
 *
 * Ranges are in global indices for Baseline and reduced indices for
 * Optimized. Disjoint ranges write disjoint amplitudes, so any partition of
 * the set, run in any order, produces the same state.
 */
template <typename Real>
void apply_iterations(StateVector<Real> &state, const GateOp &gate,
                      Strategy strategy, Index begin, Index end,
                      bool instrumented_baseline = false) {
    const IterationPlan plan = make_plan(strategy, state.num_qubits(), gate);
    detail::check_range(begin, end, plan.count);
    const PairKernel<Real> kernel{gate.matrix()};
    const auto b = static_cast<std::int64_t>(begin);
    const auto e = static_cast<std::int64_t>(end);
    if (strategy == Strategy::Baseline) {
        detail::baseline_range(state.amplitudes().data(), kernel, gate.target(),
                               gate.controls(), instrumented_baseline, b, e, 1);
    } else {
        const auto steps = skip_steps(gate.target(), gate.controls());
        detail::optimized_range(state.amplitudes().data(), kernel, gate.target(),
                                std::span<const SkipStep>(steps), b, e, 1);
    }
}

/// Visits all 2^(n-1) pairs, updating those whose controls are set.
/// Returns the number of iterations scheduled.
template <typename Real>
Index baseline_apply(StateVector<Real> &state, const GateOp &gate,
                     const ExecPolicy &policy = {}) {
    const IterationPlan plan = make_plan(Strategy::Baseline, state.num_qubits(), gate);
    const int threads = plan.count >= kParallelThreshold ? detail::resolve_threads(policy) : 1;
    detail::baseline_range(state.amplitudes().data(), PairKernel<Real>{gate.matrix()},
                           gate.target(), gate.controls(), policy.instrumented_baseline,
                           0, static_cast<std::int64_t>(plan.count), threads);
    return plan.count;
}

/// Visits only the 2^(n-n_c-1) control-satisfying pairs, unconditionally.
/// Returns the number of iterations scheduled.
template <typename Real>
Index optimized_apply(StateVector<Real> &state, const GateOp &gate,
                      const ExecPolicy &policy = {}) {
    const IterationPlan plan = make_plan(Strategy::Optimized, state.num_qubits(), gate);
    const auto steps = skip_steps(gate.target(), gate.controls());
    const int threads = plan.count >= kParallelThreshold ? detail::resolve_threads(policy) : 1;
    detail::optimized_range(state.amplitudes().data(), PairKernel<Real>{gate.matrix()},
                            gate.target(), std::span<const SkipStep>(steps), 0,
                            static_cast<std::int64_t>(plan.count), threads);
    return plan.count;
}

template <typename Real>
Index apply_gate(StateVector<Real> &state, const GateOp &gate, Strategy strategy,
                 const ExecPolicy &policy = {}) {
    return strategy == Strategy::Baseline ? baseline_apply(state, gate, policy)
                                          : optimized_apply(state, gate, policy);
}

/// Applies every gate in order; returns total iterations scheduled.
template <typename Real>
Index run_circuit(StateVector<Real> &state, const Circuit &circuit,
                  Strategy strategy, const ExecPolicy &policy = {}) {
    if (circuit.num_qubits() != state.num_qubits()) {
        throw GeometryError("circuit width " + std::to_string(circuit.num_qubits()) +
                            " does not match state width " +
                            std::to_string(state.num_qubits()));
    }
    Index total = 0;
    for (const GateOp &gate : circuit.gates()) {
        total += apply_gate(state, gate, strategy, policy);
    }
    return total;
}

/// Sum over gates of executed_iteration_count; what run_circuit must return.
inline Index expected_iterations(const Circuit &circuit, Strategy strategy) {
    Index total = 0;
    for (const GateOp &gate : circuit.gates()) {
        total += executed_iteration_count(strategy, circuit.num_qubits(),
                                          gate.num_controls());
    }
    return total;
}

} // namespace qsched
