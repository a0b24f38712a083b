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
 * Generators for the benchmark circuit families (QFT, streaming, Cuccaro
 * adders and squaring) and structural statistics over circuits.
 */
#pragma once

#include "core.hpp"

#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

namespace qsched {

/**
 * @brief QFT staircase without the terminal swap network.
 *
 * For each qubit q: H on q, then R_m on q controlled by q+m-1 for
 * m = 2..n-q. The circuit maps |x> to DFT|bitrev(x)>.
 */
inline Circuit gen_qft(unsigned n) {
    if (n < 1) {
        throw CapacityError("qft needs at least one qubit");
    }
    Circuit circuit(n);
    for (Qubit q = 0; q < n; ++q) {
        circuit.add(GateOp::h(q));
        for (unsigned m = 2; m <= n - q; ++m) {
            circuit.add(GateOp::rm(m, q, {q + m - 1}));
        }
    }
    return circuit;
}

/**
 * @brief Streaming cascade: gate k is X on qubit k controlled by 0..k-1.
 *
 * Acts on basis states as the cyclic decrement |x> -> |x - 1 mod 2^n>.
 */
inline Circuit gen_streaming(unsigned n) {
    if (n < 1) {
        throw CapacityError("streaming circuit needs at least one qubit");
    }
    Circuit circuit(n);
    for (Qubit k = 0; k < n; ++k) {
        std::vector<Qubit> controls(k);
        std::iota(controls.begin(), controls.end(), Qubit{0});
        circuit.add(GateOp::x(k, std::move(controls)));
    }
    return circuit;
}

/// Qubit assignment for one ripple-carry addition b <- a + b.
struct AdderRegisters {
    Qubit carry_in;             // must hold |0>, restored afterwards
    std::vector<Qubit> a;       // addend, restored afterwards
    std::vector<Qubit> b;       // receives (a + b) mod 2^width
    std::optional<Qubit> carry_out;  // XORed with the final carry
};

namespace detail {
inline std::vector<Qubit> with_control(std::vector<Qubit> qubits,
                                       std::optional<Qubit> control) {
    if (control) {
        qubits.push_back(*control);
    }
    return qubits;
}

inline void cx(Circuit &c, Qubit ctl, Qubit tgt, std::optional<Qubit> extra) {
    c.add(GateOp::x(tgt, with_control({ctl}, extra)));
}

inline void ccx(Circuit &c, Qubit c1, Qubit c2, Qubit tgt,
                std::optional<Qubit> extra) {
    c.add(GateOp::x(tgt, with_control({c1, c2}, extra)));
}
} // namespace detail

/**
 * @brief Appends a Cuccaro ripple-carry adder to `circuit`.
 *
 * MAJ ladder from bit 0 upwards, copy of the carry into carry_out, then the
 * UMA ladder back down. When `control` is set every gate gains that control,
 * so the whole adder is skipped when the control qubit is 0.
 */
inline void append_cuccaro_adder(Circuit &circuit, const AdderRegisters &regs,
                                 std::optional<Qubit> control = std::nullopt) {
    const std::size_t width = regs.a.size();
    if (width < 1 || regs.b.size() != width) {
        throw GeometryError("adder operands must have equal, non-zero width");
    }
    auto carry = [&](std::size_t i) { return i == 0 ? regs.carry_in : regs.a[i - 1]; };

    for (std::size_t i = 0; i < width; ++i) {  // MAJ(c_i, b_i, a_i)
        detail::cx(circuit, regs.a[i], regs.b[i], control);
        detail::cx(circuit, regs.a[i], carry(i), control);
        detail::ccx(circuit, carry(i), regs.b[i], regs.a[i], control);
    }
    if (regs.carry_out) {
        detail::cx(circuit, regs.a[width - 1], *regs.carry_out, control);
    }
    for (std::size_t k = width; k-- > 0;) {  // UMA(c_k, b_k, a_k)
        detail::ccx(circuit, carry(k), regs.b[k], regs.a[k], control);
        detail::cx(circuit, regs.a[k], carry(k), control);
        detail::cx(circuit, carry(k), regs.b[k], control);
    }
}

/// Layout of gen_cuccaro_adder(bits): carry-in 0, a at [1, bits], b at
/// [bits+1, 2*bits], carry-out 2*bits+1.
struct AdderLayout {
    unsigned bits;

    [[nodiscard]] unsigned num_qubits() const { return 2 * bits + 2; }
    [[nodiscard]] Qubit carry_in() const { return 0; }
    [[nodiscard]] Qubit a(unsigned i) const { return 1 + i; }
    [[nodiscard]] Qubit b(unsigned i) const { return 1 + bits + i; }
    [[nodiscard]] Qubit carry_out() const { return 2 * bits + 1; }

    [[nodiscard]] AdderRegisters registers() const {
        AdderRegisters regs{carry_in(), {}, {}, carry_out()};
        for (unsigned i = 0; i < bits; ++i) {
            regs.a.push_back(a(i));
            regs.b.push_back(b(i));
        }
        return regs;
    }

    [[nodiscard]] Index encode(Index a_val, Index b_val) const {
        return (a_val << 1) | (b_val << (1 + bits));
    }
    [[nodiscard]] Index decode_a(Index basis) const { return (basis >> 1) & (pow2(bits) - 1); }
    [[nodiscard]] Index decode_b(Index basis) const {
        return (basis >> (1 + bits)) & (pow2(bits) - 1);
    }
    [[nodiscard]] bool decode_carry(Index basis) const { return (basis >> carry_out()) & 1U; }
};

namespace detail {
inline void check_adder_width(unsigned bits, unsigned extra_qubits) {
    if (bits < 1 || 2 * static_cast<unsigned long long>(bits) + 2 + extra_qubits >
                        kMaxCircuitQubits) {
        throw CapacityError("invalid adder width " + std::to_string(bits));
    }
}
} // namespace detail

/// |a>|b> -> |a>|(a+b) mod 2^bits> with the carry XORed into carry-out.
inline Circuit gen_cuccaro_adder(unsigned bits) {
    detail::check_adder_width(bits, 0);
    const AdderLayout layout{bits};
    Circuit circuit(layout.num_qubits());
    append_cuccaro_adder(circuit, layout.registers());
    return circuit;
}

/// The adder of gen_cuccaro_adder(bits) with every gate additionally
/// controlled by `extra_control`, which must lie above the adder registers.
inline Circuit gen_controlled_cuccaro_adder(unsigned bits, Qubit extra_control) {
    detail::check_adder_width(bits, 1);
    const AdderLayout layout{bits};
    if (extra_control < layout.num_qubits() || extra_control >= kMaxCircuitQubits) {
        throw GeometryError("extra control must be a qubit above the adder registers");
    }
    Circuit circuit(extra_control + 1);
    append_cuccaro_adder(circuit, layout.registers(), extra_control);
    return circuit;
}

/**
 * @brief Layout of gen_squaring(k): input a at [0, k), output at [k, 3k),
 * adder carry ancilla 3k, control-copy ancilla 3k+1.
 */
struct SquaringLayout {
    unsigned input_bits;

    [[nodiscard]] unsigned num_qubits() const { return 3 * input_bits + 2; }
    [[nodiscard]] Qubit input(unsigned i) const { return i; }
    [[nodiscard]] Qubit output(unsigned i) const { return input_bits + i; }
    [[nodiscard]] Qubit carry() const { return 3 * input_bits; }
    [[nodiscard]] Qubit control_copy() const { return 3 * input_bits + 1; }

    [[nodiscard]] Index encode_input(Index a) const { return a; }
    [[nodiscard]] Index decode_input(Index basis) const {
        return basis & (pow2(input_bits) - 1);
    }
    [[nodiscard]] Index decode_output(Index basis) const {
        return (basis >> input_bits) & (pow2(2 * input_bits) - 1);
    }
    [[nodiscard]] Index decode_ancillas(Index basis) const { return basis >> (3 * input_bits); }
};

/**
 * @brief |a>|0> -> |a>|a^2> via shift-offset controlled Cuccaro adders.
 *
 * Step i copies a_i into the control ancilla, adds a into output bits
 * [i, i+k] under that control (a * 2^i), then uncomputes the copy.
 */
inline Circuit gen_squaring(unsigned input_bits) {
    if (input_bits < 1 || 3ULL * input_bits + 2 > kMaxCircuitQubits) {
        throw CapacityError("squaring output register overflows for input width " +
                            std::to_string(input_bits));
    }
    const SquaringLayout layout{input_bits};
    Circuit circuit(layout.num_qubits());
    for (unsigned i = 0; i < input_bits; ++i) {
        AdderRegisters regs{layout.carry(), {}, {}, layout.output(i + input_bits)};
        for (unsigned j = 0; j < input_bits; ++j) {
            regs.a.push_back(layout.input(j));
            regs.b.push_back(layout.output(i + j));
        }
        circuit.add(GateOp::x(layout.control_copy(), {layout.input(i)}));
        append_cuccaro_adder(circuit, regs, layout.control_copy());
        circuit.add(GateOp::x(layout.control_copy(), {layout.input(i)}));
    }
    return circuit;
}

struct CircuitStats {
    std::size_t gate_count = 0;
    std::size_t depth = 0;
    std::size_t max_controls = 0;
    std::map<std::size_t, std::size_t> controls_histogram;

    friend bool operator==(const CircuitStats &, const CircuitStats &) = default;
};

/// Depth is greedy left-packing: each gate lands one layer above the latest
/// layer holding any of its qubits.
inline CircuitStats stats(const Circuit &circuit) {
    CircuitStats s;
    std::vector<std::size_t> layer(circuit.num_qubits(), 0);
    for (const GateOp &gate : circuit.gates()) {
        ++s.gate_count;
        s.max_controls = std::max(s.max_controls, gate.num_controls());
        ++s.controls_histogram[gate.num_controls()];
        std::size_t level = layer[gate.target()];
        for (const Qubit c : gate.controls()) {
            level = std::max(level, layer[c]);
        }
        ++level;
        layer[gate.target()] = level;
        for (const Qubit c : gate.controls()) {
            layer[c] = level;
        }
        s.depth = std::max(s.depth, level);
    }
    return s;
}

} // namespace qsched
