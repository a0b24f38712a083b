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
#include <qsched/core.hpp>
#include <qsched/sched.hpp>
#include <qsched/verify.hpp>

#include <gtest/gtest.h>

#include <random>

namespace qsched {
namespace {

using cd = std::complex<double>;
constexpr double kInvSqrt2 = 0.70710678118654752440;

TEST(StateVector, GroundState) {
    const StateVector<double> s1(1);
    ASSERT_EQ(s1.size(), 2u);
    EXPECT_EQ(s1[0], cd(1.0));
    EXPECT_EQ(s1[1], cd(0.0));

    const StateVector<double> s3(3);
    ASSERT_EQ(s3.size(), 8u);
    EXPECT_EQ(s3[0], cd(1.0));
    for (Index k = 1; k < 8; ++k) {
        EXPECT_EQ(s3[k], cd(0.0));
    }
    EXPECT_DOUBLE_EQ(norm_sq(StateVector<double>(20)), 1.0);
    EXPECT_DOUBLE_EQ(norm_sq(StateVector<double>(4)), 1.0);
}

TEST(StateVector, CapacityLimits) {
    EXPECT_THROW(StateVector<double>(0), CapacityError);
    EXPECT_THROW(StateVector<double>(kMaxStateQubits + 1), CapacityError);
    EXPECT_GE(kMaxStateQubits, 26u);
    EXPECT_THROW(StateVector<double>::from_amplitudes({cd(1), cd(0), cd(0)}), CapacityError);
}

TEST(StateVector, NormOfHandBuiltState) {
    const auto s = StateVector<double>::from_amplitudes({cd(0.6, 0.0), cd(0.0, 0.8)});
    EXPECT_NEAR(norm_sq(s), 1.0, 1e-15);  // 0.36 + 0.64
}

TEST(StateVector, SinglePrecisionStorage) {
    StateVector<float> s(2);
    baseline_apply(s, GateOp::h(0));
    EXPECT_NEAR(s[0].real(), kInvSqrt2, 1e-7);
    EXPECT_NEAR(norm_sq(s), 1.0, 1e-6);
}

TEST(Gates, KnownActions) {
    StateVector<double> s(1);
    apply_pair_update(s, 0, 1, gate_x());
    EXPECT_EQ(s[0], cd(0.0));
    EXPECT_EQ(s[1], cd(1.0));

    StateVector<double> h(1);
    apply_pair_update(h, 0, 1, gate_h());
    EXPECT_NEAR(h[0].real(), kInvSqrt2, 1e-15);
    EXPECT_NEAR(h[1].real(), kInvSqrt2, 1e-15);
    EXPECT_NEAR(norm_sq(h), 1.0, 1e-15);
}

TEST(Gates, RotationOrderOneIsZ) {
    const GateMatrix r1 = gate_rm(1);
    const GateMatrix z = gate_z();
    EXPECT_NEAR(std::abs(r1.a - z.a), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(r1.d - z.d), 0.0, 1e-15);
    EXPECT_EQ(r1.b, cd(0.0));
    EXPECT_EQ(r1.c, cd(0.0));
    EXPECT_THROW(gate_rm(0), std::invalid_argument);
}

TEST(Gates, RotationPhase) {
    // R_3 = diag(1, e^{i pi/4})
    const GateMatrix r3 = gate_rm(3);
    EXPECT_NEAR(r3.d.real(), kInvSqrt2, 1e-15);
    EXPECT_NEAR(r3.d.imag(), kInvSqrt2, 1e-15);
}

TEST(Gates, AllUnitary) {
    for (const GateMatrix &m : {gate_h(), gate_x(), gate_y(), gate_z()}) {
        EXPECT_TRUE(is_unitary(m, 1e-12));
    }
    for (unsigned m = 1; m <= 40; ++m) {
        EXPECT_TRUE(is_unitary(gate_rm(m), 1e-12)) << "m=" << m;
    }
    EXPECT_FALSE(is_unitary(GateMatrix{1.0, 1.0, 0.0, 1.0}));
}

TEST(Gates, YIsIXZ) {
    // Y = i X Z
    const GateMatrix xz = gate_x() * gate_z();
    const GateMatrix y = gate_y();
    EXPECT_NEAR(std::abs(y.b - cd(0, 1) * xz.b), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(y.c - cd(0, 1) * xz.c), 0.0, 1e-15);
}

TEST(PairUpdate, TouchesOnlyThePair) {
    std::mt19937_64 rng(7);
    const auto before = random_state<double>(4, rng);
    auto after = before;
    apply_pair_update(after, 2, 6, random_unitary(rng));
    for (Index k = 0; k < before.size(); ++k) {
        if (k != 2 && k != 6) {
            EXPECT_EQ(after[k], before[k]) << k;
        }
    }
    EXPECT_NE(after[2], before[2]);
    EXPECT_NEAR(norm_sq(after), norm_sq(before), 1e-12);
}

TEST(PairUpdate, IdentityLeavesStateUnchanged) {
    std::mt19937_64 rng(8);
    const auto before = random_state<double>(3, rng);
    auto after = before;
    apply_pair_update(after, 1, 3, GateMatrix{});
    EXPECT_EQ(after, before);
}

TEST(PairUpdate, SwapAndHadamardExpansion) {
    auto s = StateVector<double>::basis(2, 0);
    apply_pair_update(s, 0, 1, gate_x());
    EXPECT_EQ(s[1], cd(1.0));
    EXPECT_EQ(s[0], cd(0.0));

    // H on (2, 6) of |2>: new[2] = a*1, new[6] = c*1
    auto b = StateVector<double>::basis(3, 2);
    apply_pair_update(b, 2, 6, gate_h());
    EXPECT_NEAR(b[2].real(), kInvSqrt2, 1e-15);
    EXPECT_NEAR(b[6].real(), kInvSqrt2, 1e-15);
    for (Index k : {0, 1, 3, 4, 5, 7}) {
        EXPECT_EQ(b[k], cd(0.0));
    }
}

TEST(PairUpdate, NormPreservedPerPair) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 200; ++trial) {
        auto s = random_state<double>(5, rng);
        const Qubit t = static_cast<Qubit>(rng() % 5);
        const Index i = rng() % 16;
        const auto [p1, p2] = pair_indices(i, t);
        apply_pair_update(s, p1, p2, random_unitary(rng));
        EXPECT_NEAR(norm_sq(s), 1.0, 1e-12);
    }
}

TEST(PairUpdateDeathTest, OutOfRangeIsFatal) {
    StateVector<double> s(2);
    EXPECT_DEATH(apply_pair_update(s, 0, 4, gate_x()), "out of range");
    EXPECT_DEATH(apply_pair_update(s, 1, 1, gate_x()), "out of range");
}

TEST(GateOp, ControlsNormalizedAscending) {
    const GateOp g = GateOp::x(0, {3, 1, 2});
    ASSERT_EQ(g.num_controls(), 3u);
    EXPECT_EQ(g.controls()[0], 1u);
    EXPECT_EQ(g.controls()[1], 2u);
    EXPECT_EQ(g.controls()[2], 3u);
    EXPECT_EQ(g.max_qubit(), 3u);
}

TEST(GateOp, RejectsBadControls) {
    EXPECT_THROW(GateOp::x(0, {1, 1}), GeometryError);
    EXPECT_THROW(GateOp::x(2, {2}), GeometryError);
    EXPECT_THROW(GateOp::h(0, {1}).validate(1), GeometryError);
}

TEST(Circuit, ValidatesRange) {
    Circuit c(3);
    c.add(GateOp::h(2, {0, 1}));
    EXPECT_THROW(c.add(GateOp::h(3)), GeometryError);
    EXPECT_THROW(c.add(GateOp::h(0, {5})), GeometryError);
    EXPECT_EQ(c.size(), 1u);
    EXPECT_THROW(Circuit(0), CapacityError);
}

}  // namespace
}  // namespace qsched
