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
 * Dense-matrix reference for small registers. Shares no index arithmetic
 * with the schedulers: every operator is built entry by entry from basis
 * state bit patterns.
 */
#pragma once

#include "core.hpp"

#include <complex>
#include <numbers>
#include <vector>

namespace qsched {

inline constexpr unsigned kMaxDenseQubits = 12;
inline constexpr unsigned kMaxDftQubits = 10;

/// 2^n x 2^n complex matrix, row-major.
struct DenseOperator {
    unsigned num_qubits = 0;
    std::vector<std::complex<double>> entries;

    [[nodiscard]] Index dim() const { return pow2(num_qubits); }
    std::complex<double> &at(Index row, Index col) { return entries[row * dim() + col]; }
    [[nodiscard]] const std::complex<double> &at(Index row, Index col) const {
        return entries[row * dim() + col];
    }

    static DenseOperator zero(unsigned n) {
        if (n > kMaxDenseQubits) {
            throw CapacityError("dense operator limited to " +
                                std::to_string(kMaxDenseQubits) + " qubits");
        }
        DenseOperator op{n, {}};
        op.entries.assign(op.dim() * op.dim(), {});
        return op;
    }

    static DenseOperator identity(unsigned n) {
        DenseOperator op = zero(n);
        for (Index k = 0; k < op.dim(); ++k) {
            op.at(k, k) = 1.0;
        }
        return op;
    }
};

inline DenseOperator gate_to_dense(const GateOp &gate, unsigned n) {
    gate.validate(n);
    DenseOperator op = DenseOperator::zero(n);
    const GateMatrix &m = gate.matrix();
    const std::complex<double> block[2][2] = {{m.a, m.b}, {m.c, m.d}};
    Index control_mask = 0;
    for (const Qubit c : gate.controls()) {
        control_mask |= pow2(c);
    }
    const Index target_bit = pow2(gate.target());
    for (Index row = 0; row < op.dim(); ++row) {
        if ((row & control_mask) != control_mask) {
            op.at(row, row) = 1.0;
            continue;
        }
        const unsigned row_bit = (row & target_bit) ? 1 : 0;
        for (unsigned col_bit = 0; col_bit < 2; ++col_bit) {
            const Index col = (row & ~target_bit) | (col_bit ? target_bit : 0);
            op.at(row, col) = block[row_bit][col_bit];
        }
    }
    return op;
}

/// lhs * rhs.
inline DenseOperator multiply(const DenseOperator &lhs, const DenseOperator &rhs) {
    if (lhs.num_qubits != rhs.num_qubits) {
        throw GeometryError("operator dimension mismatch");
    }
    DenseOperator out = DenseOperator::zero(lhs.num_qubits);
    const Index dim = lhs.dim();
    for (Index i = 0; i < dim; ++i) {
        for (Index k = 0; k < dim; ++k) {
            const auto l = lhs.at(i, k);
            if (l == std::complex<double>{}) {
                continue;
            }
            for (Index j = 0; j < dim; ++j) {
                out.at(i, j) += l * rhs.at(k, j);
            }
        }
    }
    return out;
}

/// Product of all gate operators, last gate leftmost.
inline DenseOperator circuit_to_dense(const Circuit &circuit) {
    DenseOperator acc = DenseOperator::identity(circuit.num_qubits());
    for (const GateOp &gate : circuit.gates()) {
        acc = multiply(gate_to_dense(gate, circuit.num_qubits()), acc);
    }
    return acc;
}

template <typename Real>
StateVector<Real> dense_apply(const DenseOperator &op, const StateVector<Real> &state) {
    if (op.num_qubits != state.num_qubits()) {
        throw GeometryError("operator and state dimensions differ");
    }
    std::vector<std::complex<Real>> out(state.size());
    for (Index row = 0; row < op.dim(); ++row) {
        std::complex<double> acc{};
        for (Index col = 0; col < op.dim(); ++col) {
            acc += op.at(row, col) * static_cast<std::complex<double>>(state[col]);
        }
        out[row] = static_cast<std::complex<Real>>(acc);
    }
    return StateVector<Real>::from_amplitudes(std::move(out));
}

/// Entries omega^(j*k) / sqrt(2^n) with omega = exp(2*pi*i / 2^n).
inline DenseOperator dft_reference(unsigned n) {
    if (n > kMaxDftQubits) {
        throw CapacityError("dft reference limited to " +
                            std::to_string(kMaxDftQubits) + " qubits");
    }
    DenseOperator op = DenseOperator::zero(n);
    const Index dim = op.dim();
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    for (Index j = 0; j < dim; ++j) {
        for (Index k = 0; k < dim; ++k) {
            // Reduce the exponent mod dim before scaling to keep the angle exact.
            const double angle = 2.0 * std::numbers::pi *
                                 static_cast<double>((j * k) % dim) /
                                 static_cast<double>(dim);
            op.at(j, k) = std::polar(scale, angle);
        }
    }
    return op;
}

inline Index bit_reverse(Index x, unsigned n) {
    Index r = 0;
    for (unsigned b = 0; b < n; ++b) {
        r |= ((x >> b) & 1U) << (n - 1 - b);
    }
    return r;
}

/// Permutation P with P|x> = |bitrev(x)>.
inline DenseOperator bit_reversal(unsigned n) {
    DenseOperator op = DenseOperator::zero(n);
    for (Index x = 0; x < op.dim(); ++x) {
        op.at(bit_reverse(x, n), x) = 1.0;
    }
    return op;
}

inline double max_abs_diff(const DenseOperator &lhs, const DenseOperator &rhs) {
    if (lhs.num_qubits != rhs.num_qubits) {
        throw GeometryError("operator dimension mismatch");
    }
    double worst = 0.0;
    for (std::size_t k = 0; k < lhs.entries.size(); ++k) {
        worst = std::max(worst, std::abs(lhs.entries[k] - rhs.entries[k]));
    }
    return worst;
}

inline bool is_unitary(const DenseOperator &op, double tol = 1e-9) {
    const Index dim = op.dim();
    for (Index i = 0; i < dim; ++i) {
        for (Index j = 0; j < dim; ++j) {
            std::complex<double> acc{};
            for (Index k = 0; k < dim; ++k) {
                acc += op.at(i, k) * std::conj(op.at(j, k));
            }
            if (std::abs(acc - (i == j ? 1.0 : 0.0)) > tol) {
                return false;
            }
        }
    }
    return true;
}

} // namespace qsched
