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
#include <qsched/circuits.hpp>
#include <qsched/oracle.hpp>
#include <qsched/sched.hpp>
#include <qsched/verify.hpp>

#include <gtest/gtest.h>

#include <random>

namespace qsched {
namespace {

using cd = std::complex<double>;

TEST(GateToDense, PauliX) {
    const auto op = gate_to_dense(GateOp::x(0), 1);
    EXPECT_EQ(op.at(0, 0), cd(0));
    EXPECT_EQ(op.at(0, 1), cd(1));
    EXPECT_EQ(op.at(1, 0), cd(1));
    EXPECT_EQ(op.at(1, 1), cd(0));
}

TEST(GateToDense, Cnot) {
    // target 0, control 1: |10> <-> |11>, i.e. basis 2 <-> 3
    const auto op = gate_to_dense(GateOp::x(0, {1}), 2);
    DenseOperator expected = DenseOperator::zero(2);
    expected.at(0, 0) = expected.at(1, 1) = 1.0;
    expected.at(2, 3) = expected.at(3, 2) = 1.0;
    EXPECT_EQ(max_abs_diff(op, expected), 0.0);

    const auto out = dense_apply(op, StateVector<double>::basis(2, 0b10));
    EXPECT_EQ(out, (StateVector<double>::basis(2, 0b11)));
}

TEST(GateToDense, FullyControlledHasOneBlock) {
    std::mt19937_64 rng(1);
    for (unsigned n = 2; n <= 6; ++n) {
        for (Qubit t = 0; t < n; ++t) {
            const GateOp g(random_unitary(rng), t, random_controls(n, t, n - 1, rng));
            const auto op = gate_to_dense(g, n);
            std::size_t non_identity_rows = 0;
            for (Index r = 0; r < op.dim(); ++r) {
                for (Index c = 0; c < op.dim(); ++c) {
                    if (op.at(r, c) != (r == c ? cd(1) : cd(0))) {
                        ++non_identity_rows;
                        break;
                    }
                }
            }
            EXPECT_EQ(non_identity_rows, 2u);
            EXPECT_TRUE(is_unitary(op));
        }
    }
}

TEST(GateToDense, CapacityGuard) {
    EXPECT_THROW(gate_to_dense(GateOp::x(0), kMaxDenseQubits + 1), CapacityError);
}

TEST(DenseApply, IdentityAndNorm) {
    std::mt19937_64 rng(2);
    const auto s = random_state<double>(4, rng);
    EXPECT_EQ(dense_apply(DenseOperator::identity(4), s), s);
    const GateOp g(random_unitary(rng), 2, {0});
    EXPECT_NEAR(norm_sq(dense_apply(gate_to_dense(g, 4), s)), 1.0, 1e-9);
    EXPECT_THROW(dense_apply(DenseOperator::identity(3), s), GeometryError);
}

TEST(DftReference, SmallSizes) {
    EXPECT_LT(max_abs_diff(dft_reference(1), gate_to_dense(GateOp::h(0), 1)), 1e-15);
    EXPECT_TRUE(is_unitary(dft_reference(2), 1e-12));
    EXPECT_TRUE(is_unitary(dft_reference(5), 1e-12));
    EXPECT_THROW(dft_reference(kMaxDftQubits + 1), CapacityError);
}

TEST(DftReference, QftThreeQubits) {
    const auto qft = circuit_to_dense(gen_qft(3));
    const auto reference = multiply(dft_reference(3), bit_reversal(3));
    EXPECT_LT(max_abs_diff(qft, reference), 1e-9);
}

TEST(BitReverse, Values) {
    EXPECT_EQ(bit_reverse(0b001, 3), 0b100u);
    EXPECT_EQ(bit_reverse(0b110, 3), 0b011u);
    EXPECT_EQ(bit_reverse(0b1011, 4), 0b1101u);
}

// Dense oracle == baseline == optimized for every geometry up to 6 qubits.
TEST(Oracle, AgreesWithBothSchedulers) {
    std::mt19937_64 rng(4);
    for_each_geometry(1, 6, [&](const Geometry &g) {
        const GateOp gate(random_unitary(rng), g.target, g.controls);
        const auto start = random_state<double>(g.num_qubits, rng);
        const auto dense = dense_apply(gate_to_dense(gate, g.num_qubits), start);
        auto base = start;
        auto opt = start;
        baseline_apply(base, gate);
        optimized_apply(opt, gate);
        for (Index k = 0; k < start.size(); ++k) {
            EXPECT_LT(std::abs(dense[k] - base[k]), 1e-10) << to_string(g);
            EXPECT_LT(std::abs(dense[k] - opt[k]), 1e-10) << to_string(g);
        }
        return !::testing::Test::HasFailure();
    });
}

}  // namespace
}  // namespace qsched
