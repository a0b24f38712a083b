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
#include <qsched/circuit_io.hpp>
#include <qsched/circuits.hpp>

#include <gtest/gtest.h>

#include <random>

namespace qsched {
namespace {

ParseError parse_failure(std::string_view text) {
    try {
        parse_circuit(text);
    } catch (const ParseError &e) {
        return e;
    }
    ADD_FAILURE() << "expected a parse error for: " << text;
    return ParseError(0, 0, "");
}

TEST(ParseCircuit, SmallExample) {
    const Circuit c = parse_circuit("qubits 2\nh 0\ncx 1 0");
    ASSERT_EQ(c.num_qubits(), 2u);
    ASSERT_EQ(c.size(), 2u);
    EXPECT_EQ(c.gates()[0], GateOp::h(0));
    EXPECT_EQ(c.gates()[1], GateOp::x(0, {1}));
}

TEST(ParseCircuit, CanonicalAndPrefixedFormsAgree) {
    const Circuit canonical = parse_circuit("qubits 4\nx 3 0 2\nrm:3 1 0\n");
    const Circuit prefixed = parse_circuit("qubits 4\nccx 2 0 3\ncrm:3 0 1\n");
    EXPECT_EQ(canonical, prefixed);
}

TEST(ParseCircuit, CommentsWhitespaceAndCrlf) {
    const Circuit c =
        parse_circuit("# header comment\r\n  qubits\t3  \r\n\r\nh 0 # trailing\r\n\t z   2 0 1\r\n");
    ASSERT_EQ(c.size(), 2u);
    EXPECT_EQ(c.gates()[1], GateOp::z(2, {0, 1}));
}

TEST(ParseCircuit, AllGateNames) {
    const Circuit c = parse_circuit("qubits 2\nh 0\nx 0\ny 1\nz 1\nrm:1 0\nrm:7 1 0\n");
    ASSERT_EQ(c.size(), 6u);
    EXPECT_EQ(c.gates()[2].kind(), GateKind::Y);
    EXPECT_EQ(c.gates()[5], GateOp::rm(7, 1, {0}));
}

TEST(ParseCircuit, RangeErrorPositioned) {
    const auto e = parse_failure("qubits 3\nh 5");
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 3u);
}

TEST(ParseCircuit, Diagnostics) {
    struct Case {
        const char *text;
        std::size_t line, column;
    };
    const Case cases[] = {
        {"qubits 2\nfoo 0", 2, 1},           // unknown gate
        {"qubits 2\nh 0x1", 2, 3},           // malformed number
        {"qubits 3\nx 0 1 1", 2, 7},         // duplicate control
        {"qubits 3\nx 0 2 0", 2, 7},         // control collides with target
        {"qubits 3\ncx 0", 2, 1},            // prefixed arity
        {"qubits 3\nh", 2, 1},               // missing target
        {"h 0\nqubits 2", 1, 1},             // gate before header
        {"qubits 2\nqubits 2", 2, 1},        // duplicate header
        {"qubits 0", 1, 8},                  // empty register
        {"qubits 99", 1, 8},                 // too wide
        {"qubits 2\nrm:0 0", 2, 1},          // rotation order
        {"qubits 2\nrm:x 0", 2, 1},          // malformed order
        {"qubits 2\nh -1", 2, 3},            // negative
        {"qubits 2\nh 99999999999999999999999", 2, 3},  // overflow
        {"", 1, 1},                          // no header
    };
    for (const Case &c : cases) {
        const auto e = parse_failure(c.text);
        EXPECT_EQ(e.line(), c.line) << c.text << " -> " << e.what();
        EXPECT_EQ(e.column(), c.column) << c.text << " -> " << e.what();
    }
}

TEST(SerializeCircuit, RoundTripGenerated) {
    std::vector<Circuit> circuits;
    for (unsigned n = 1; n <= 8; ++n) {
        circuits.push_back(gen_qft(n));
        circuits.push_back(gen_streaming(n));
    }
    for (unsigned k = 1; k <= 5; ++k) {
        circuits.push_back(gen_squaring(k));
        circuits.push_back(gen_cuccaro_adder(k));
    }
    for (const Circuit &c : circuits) {
        const std::string text = serialize_circuit(c);
        EXPECT_EQ(text.find('\r'), std::string::npos);
        EXPECT_EQ(parse_circuit(text), c);
        EXPECT_EQ(serialize_circuit(parse_circuit(text)), text);
    }
}

TEST(SerializeCircuit, Format) {
    Circuit c(3);
    c.add(GateOp::h(0)).add(GateOp::rm(3, 2, {1, 0}));
    EXPECT_EQ(serialize_circuit(c), "qubits 3\nh 0\nrm:3 2 0 1\n");
    Circuit custom(1);
    custom.add(GateOp(gate_x(), 0));
    EXPECT_THROW(serialize_circuit(custom), Error);
}

// Arbitrary bytes must yield a circuit or a ParseError, nothing else.
TEST(ParseCircuit, FuzzRandomBytes) {
    std::mt19937_64 rng(99);
    const std::string alphabet = "qubits hxyzrmc:0123456789#\n\r\t -";
    for (int trial = 0; trial < 20000; ++trial) {
        std::string text(rng() % 64, '\0');
        const bool structured = trial % 2 == 0;
        for (auto &ch : text) {
            ch = structured ? alphabet[rng() % alphabet.size()] : static_cast<char>(rng());
        }
        if (structured && trial % 4 == 0) text = "qubits 4\n" + text;
        try {
            const Circuit c = parse_circuit(text);
            EXPECT_EQ(parse_circuit(serialize_circuit(c)), c);
        } catch (const ParseError &) {
        }
    }
}

}  // namespace
}  // namespace qsched
