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
 * State-vector storage, single-qubit gate matrices, gate operations and
 * circuits, plus the pair update shared by every scheduler.
 */
#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <new>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace qsched {

using Index = std::uint64_t;
using Qubit = unsigned;

/// Largest register a StateVector will allocate (2^30 amplitudes).
inline constexpr unsigned kMaxStateQubits = 30;
/// Largest register a Circuit may describe; bounded by 64-bit index math.
inline constexpr unsigned kMaxCircuitQubits = 62;

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Register too large (or empty) for the requested storage.
class CapacityError : public Error {
  public:
    using Error::Error;
};

/// Gate or circuit geometry violates a structural invariant.
class GeometryError : public Error {
  public:
    using Error::Error;
};

namespace detail {
[[noreturn]] inline void fatal(const char *what) {
    std::fprintf(stderr, "qsched: fatal: %s\n", what);
    std::abort();
}
} // namespace detail

constexpr Index pow2(unsigned exponent) { return Index{1} << exponent; }

/// Row-major 2x2 complex matrix [[a, b], [c, d]].
struct GateMatrix {
    std::complex<double> a{1.0}, b{0.0}, c{0.0}, d{1.0};

    friend bool operator==(const GateMatrix &, const GateMatrix &) = default;

    [[nodiscard]] GateMatrix adjoint() const {
        return {std::conj(a), std::conj(c), std::conj(b), std::conj(d)};
    }

    [[nodiscard]] GateMatrix operator*(const GateMatrix &o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c,
                c * o.b + d * o.d};
    }
};

/// True when M * M^dagger equals the identity entry-wise within tol.
inline bool is_unitary(const GateMatrix &m, double tol = 1e-10) {
    const GateMatrix p = m * m.adjoint();
    return std::abs(p.a - 1.0) <= tol && std::abs(p.b) <= tol &&
           std::abs(p.c) <= tol && std::abs(p.d - 1.0) <= tol;
}

inline GateMatrix gate_h() {
    const double s = 1.0 / std::numbers::sqrt2;
    return {s, s, s, -s};
}
inline GateMatrix gate_x() { return {0.0, 1.0, 1.0, 0.0}; }
inline GateMatrix gate_y() {
    return {0.0, std::complex<double>{0.0, -1.0}, std::complex<double>{0.0, 1.0},
            0.0};
}
inline GateMatrix gate_z() { return {1.0, 0.0, 0.0, -1.0}; }

/// Phase rotation diag(1, exp(2*pi*i / 2^m)), the QFT rotation.
inline GateMatrix gate_rm(unsigned m) {
    if (m < 1) {
        throw std::invalid_argument("rm: order m must be >= 1");
    }
    const double angle = 2.0 * std::numbers::pi / std::ldexp(1.0, static_cast<int>(m));
    return {1.0, 0.0, 0.0, std::polar(1.0, angle)};
}

/// Which named gate a GateOp carries; Custom matrices cannot be serialized.
enum class GateKind { H, X, Y, Z, Rm, Custom };

/**
 * @brief A single-qubit gate with an arbitrary number of positive controls.
 *
 * Controls are sorted ascending on construction. Duplicates and a control
 * equal to the target are rejected, so every GateOp satisfies the ordering
 * the reduced-to-global mapping depends on.
 */
class GateOp {
  public:
    GateOp(GateMatrix matrix, Qubit target, std::vector<Qubit> controls = {},
           GateKind kind = GateKind::Custom, unsigned rm_order = 0)
        : matrix_(matrix), target_(target), controls_(std::move(controls)),
          kind_(kind), rm_order_(rm_order) {
        std::sort(controls_.begin(), controls_.end());
        if (std::adjacent_find(controls_.begin(), controls_.end()) !=
            controls_.end()) {
            throw GeometryError("gate has duplicate control qubits");
        }
        if (std::binary_search(controls_.begin(), controls_.end(), target_)) {
            throw GeometryError("control qubit " + std::to_string(target_) +
                                " collides with the target");
        }
    }

    static GateOp h(Qubit t, std::vector<Qubit> c = {}) {
        return {gate_h(), t, std::move(c), GateKind::H};
    }
    static GateOp x(Qubit t, std::vector<Qubit> c = {}) {
        return {gate_x(), t, std::move(c), GateKind::X};
    }
    static GateOp y(Qubit t, std::vector<Qubit> c = {}) {
        return {gate_y(), t, std::move(c), GateKind::Y};
    }
    static GateOp z(Qubit t, std::vector<Qubit> c = {}) {
        return {gate_z(), t, std::move(c), GateKind::Z};
    }
    static GateOp rm(unsigned m, Qubit t, std::vector<Qubit> c = {}) {
        return {gate_rm(m), t, std::move(c), GateKind::Rm, m};
    }

    [[nodiscard]] const GateMatrix &matrix() const { return matrix_; }
    [[nodiscard]] Qubit target() const { return target_; }
    [[nodiscard]] std::span<const Qubit> controls() const { return controls_; }
    [[nodiscard]] std::size_t num_controls() const { return controls_.size(); }
    [[nodiscard]] GateKind kind() const { return kind_; }
    [[nodiscard]] unsigned rm_order() const { return rm_order_; }

    /// Highest qubit index the gate touches.
    [[nodiscard]] Qubit max_qubit() const {
        return controls_.empty() ? target_ : std::max(target_, controls_.back());
    }

    /// Throws GeometryError unless the gate fits an n-qubit register.
    void validate(unsigned num_qubits) const {
        if (max_qubit() >= num_qubits) {
            throw GeometryError("gate touches qubit " + std::to_string(max_qubit()) +
                                " outside a " + std::to_string(num_qubits) +
                                "-qubit register");
        }
    }

    friend bool operator==(const GateOp &, const GateOp &) = default;

  private:
    GateMatrix matrix_;
    Qubit target_;
    std::vector<Qubit> controls_;
    GateKind kind_;
    unsigned rm_order_;
};

/// Ordered gate sequence over a fixed register width.
class Circuit {
  public:
    explicit Circuit(unsigned num_qubits) : num_qubits_(num_qubits) {
        if (num_qubits < 1 || num_qubits > kMaxCircuitQubits) {
            throw CapacityError("circuit width " + std::to_string(num_qubits) +
                                " outside [1, " +
                                std::to_string(kMaxCircuitQubits) + "]");
        }
    }

    Circuit &add(GateOp gate) {
        gate.validate(num_qubits_);
        gates_.push_back(std::move(gate));
        return *this;
    }

    [[nodiscard]] unsigned num_qubits() const { return num_qubits_; }
    [[nodiscard]] std::span<const GateOp> gates() const { return gates_; }
    [[nodiscard]] std::size_t size() const { return gates_.size(); }
    [[nodiscard]] bool empty() const { return gates_.empty(); }

    friend bool operator==(const Circuit &, const Circuit &) = default;

  private:
    unsigned num_qubits_;
    std::vector<GateOp> gates_;
};

/**
 * @brief Dense vector of 2^n amplitudes, qubit 0 being the least significant
 * bit of the basis index.
 *
 * @tparam Real float or double storage precision.
 */
template <typename Real> class StateVector {
    static_assert(std::is_floating_point_v<Real>);

  public:
    using value_type = std::complex<Real>;

    /// |0...0>.
    explicit StateVector(unsigned num_qubits) : num_qubits_(num_qubits) {
        if (num_qubits < 1 || num_qubits > kMaxStateQubits) {
            throw CapacityError("state of " + std::to_string(num_qubits) +
                                " qubits outside supported range [1, " +
                                std::to_string(kMaxStateQubits) + "]");
        }
        try {
            amplitudes_.assign(pow2(num_qubits), value_type{});
        } catch (const std::bad_alloc &) {
            throw CapacityError("cannot allocate " + std::to_string(num_qubits) +
                                "-qubit state vector");
        }
        amplitudes_[0] = value_type{1};
    }

    /// Takes ownership of explicit amplitudes; length must be a power of two.
    static StateVector from_amplitudes(std::vector<value_type> amps) {
        const auto len = amps.size();
        if (len < 2 || (len & (len - 1)) != 0) {
            throw CapacityError("amplitude count must be a power of two >= 2");
        }
        StateVector s(1);
        s.num_qubits_ = static_cast<unsigned>(std::countr_zero(len));
        if (s.num_qubits_ > kMaxStateQubits) {
            throw CapacityError("amplitude vector too large");
        }
        s.amplitudes_ = std::move(amps);
        return s;
    }

    /// Basis state |index>.
    static StateVector basis(unsigned num_qubits, Index index) {
        StateVector s(num_qubits);
        if (index >= s.size()) {
            throw std::out_of_range("basis index outside the register");
        }
        s.amplitudes_[0] = value_type{};
        s.amplitudes_[index] = value_type{1};
        return s;
    }

    [[nodiscard]] unsigned num_qubits() const { return num_qubits_; }
    [[nodiscard]] Index size() const { return amplitudes_.size(); }

    [[nodiscard]] std::span<value_type> amplitudes() { return amplitudes_; }
    [[nodiscard]] std::span<const value_type> amplitudes() const {
        return amplitudes_;
    }
    value_type &operator[](Index k) { return amplitudes_[k]; }
    const value_type &operator[](Index k) const { return amplitudes_[k]; }

    friend bool operator==(const StateVector &, const StateVector &) = default;

  private:
    unsigned num_qubits_;
    std::vector<value_type> amplitudes_;
};

template <typename Real> double norm_sq(const StateVector<Real> &state) {
    double sum = 0.0;
    for (const auto &amp : state.amplitudes()) {
        sum += static_cast<double>(std::norm(amp));
    }
    return sum;
}

/// Gate matrix entries converted to the state's storage precision.
template <typename Real> struct PairKernel {
    std::complex<Real> a, b, c, d;

    explicit PairKernel(const GateMatrix &m)
        : a(static_cast<std::complex<Real>>(m.a)),
          b(static_cast<std::complex<Real>>(m.b)),
          c(static_cast<std::complex<Real>>(m.c)),
          d(static_cast<std::complex<Real>>(m.d)) {}

    void operator()(std::complex<Real> *amps, Index p1, Index p2) const {
        const std::complex<Real> v1 = amps[p1];
        const std::complex<Real> v2 = amps[p2];
        amps[p1] = a * v1 + b * v2;
        amps[p2] = c * v1 + d * v2;
    }
};

/**
 * @brief new[p1] = a*old[p1] + b*old[p2]; new[p2] = c*old[p1] + d*old[p2].
 *
 * Out-of-range or coinciding indices are a programming error and abort.
 */
template <typename Real>
void apply_pair_update(StateVector<Real> &state, Index p1, Index p2,
                       const GateMatrix &m) {
    if (p1 >= state.size() || p2 >= state.size() || p1 == p2) {
        detail::fatal("apply_pair_update: pair indices out of range");
    }
    PairKernel<Real>{m}(state.amplitudes().data(), p1, p2);
}

} // namespace qsched
