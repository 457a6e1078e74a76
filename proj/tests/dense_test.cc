// Copyright 2026 The stabmagic Authors
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

#include "stabmagic/dense.h"

#include <numbers>
#include <set>

#include "gtest/gtest.h"
#include "test_util.h"

using namespace stabmagic;

namespace {

const Complex kI(0, 1);
const double kR = 1 / std::numbers::sqrt2;

// Hand-written 4x4 matrices with basis index = ancilla + 2 * data.
Matrix cnot_data_to_ancilla() {
    Matrix m = Matrix::Zero(4, 4);
    // |a, d> -> |a ^ d, d>
    m(0, 0) = 1;
    m(1, 1) = 1;
    m(3, 2) = 1;
    m(2, 3) = 1;
    return m;
}

Matrix h_on_ancilla() {
    Matrix m = Matrix::Zero(4, 4);
    m(0, 0) = kR;
    m(0, 1) = kR;
    m(1, 0) = kR;
    m(1, 1) = -kR;
    m(2, 2) = kR;
    m(2, 3) = kR;
    m(3, 2) = kR;
    m(3, 3) = -kR;
    return m;
}

Vector two_qubit(const Vector &ancilla, const Vector &data) {
    Vector v(4);
    for (int a = 0; a < 2; a++) {
        for (int d = 0; d < 2; d++) {
            v[a + 2 * d] = ancilla[a] * data[d];
        }
    }
    return v;
}

Vector pi_over_2() {
    Vector v(2);
    v << kR, kR * kI;
    return v;
}

Vector pi_over_4() {
    Vector v(2);
    v << kR, kR * std::polar(1.0, std::numbers::pi / 4);
    return v;
}

const char *kFig2 = "qubits 2\nCNOT 1 0\nH 0\nCNOT 1 0\nH 0\n";
const char *kFig3 = "qubits 2\nCNOT 1 0\nM 0 -> c0\nIF c0 S 1\n";

}  // namespace

TEST(dense, hadamard_on_zero) {
    PureRun r = simulate_pure(parse_circuit("qubits 1\nH 0"), StateVector(1), 0);
    EXPECT_NEAR(std::abs(r.state.amplitudes()[0] - kR), 0, 1e-15);
    EXPECT_NEAR(std::abs(r.state.amplitudes()[1] - kR), 0, 1e-15);
}

TEST(dense, reusable_s_body_factorizes) {
    // Oracle: the literal product (H.CNOT.H.CNOT) of hand-built matrices.
    Matrix body = h_on_ancilla() * cnot_data_to_ancilla() * h_on_ancilla() * cnot_data_to_ancilla();
    Circuit c = parse_circuit(kFig2);
    EXPECT_LT((circuit_unitary(c) - body).cwiseAbs().maxCoeff(), 1e-15);

    std::mt19937_64 rng(8);
    Matrix s = Matrix::Identity(2, 2);
    s(1, 1) = kI;
    for (int trial = 0; trial < 100; trial++) {
        Vector psi = random_state(1, rng);
        Vector in = two_qubit(pi_over_2(), psi);
        Vector expected = two_qubit(pi_over_2(), s * psi);
        PureRun r = simulate_pure(c, StateVector(in), trial);
        EXPECT_LT((r.state.amplitudes() - expected).cwiseAbs().maxCoeff(), 1e-12);
        EXPECT_LT((body * in - expected).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(dense, t_gadget_both_branches_apply_t) {
    Circuit c = parse_circuit(kFig3);
    Vector plus(2);
    plus << kR, kR;
    Vector t_plus(2);
    t_plus << kR, kR * std::polar(1.0, std::numbers::pi / 4);
    Vector in = two_qubit(pi_over_4(), plus);
    std::set<int> seen;
    for (uint64_t seed = 0; seed < 40; seed++) {
        PureRun r = simulate_pure(c, StateVector(in), seed);
        seen.insert(r.bits[0]);
        Vector expected = two_qubit(r.bits[0] ? Vector(Vector::Unit(2, 1)) : Vector(Vector::Unit(2, 0)), t_plus);
        EXPECT_NEAR(overlap(r.state.amplitudes(), expected), 1.0, 1e-12);
    }
    EXPECT_EQ(seen.size(), 2u);
}

TEST(dense, distribution_examples) {
    Distribution plus = distribution(parse_circuit("qubits 1\nH 0\nM 0 -> c0"), StateVector(1));
    EXPECT_NEAR(plus["0"], 0.5, 1e-15);
    EXPECT_NEAR(plus["1"], 0.5, 1e-15);

    Distribution zero = distribution(parse_circuit("qubits 1\nM 0 -> c0"), StateVector(1));
    EXPECT_EQ(zero.size(), 1u);
    EXPECT_NEAR(zero["0"], 1.0, 1e-15);

    // The T gadget's bit is uniform whatever the data state: analytically the
    // CNOT maps |psi>|pi/4> to a|0>(|0>+w|1>) + b|1>(|1>+w|0>), so each
    // ancilla outcome has weight (|a|^2 + |b|^2)/2.
    std::mt19937_64 rng(4);
    Circuit t = parse_circuit(kFig3);
    for (int trial = 0; trial < 50; trial++) {
        Distribution d = distribution(t, StateVector(two_qubit(pi_over_4(), random_state(1, rng))));
        EXPECT_NEAR(d["0"], 0.5, 1e-12);
        EXPECT_NEAR(d["1"], 0.5, 1e-12);
    }

    Circuit too_many{1, 21, {}};
    for (uint32_t b = 0; b < 21; b++) {
        too_many.instructions.push_back(MeasureOp{0, b});
    }
    EXPECT_THROW(distribution(too_many, StateVector(1)), OracleOverflow);
    EXPECT_THROW(simulate_pure(Circuit{13, 0, {}}, StateVector(13), 0), OracleOverflow);
}

TEST(dense, density_input_uses_purification) {
    Circuit c = parse_circuit("qubits 2\nCNOT 0 1\nM 1 -> c0");
    std::vector<uint32_t> placement{0};
    Distribution mixed = distribution(c, DensityMatrix::maximally_mixed(1), placement);
    EXPECT_NEAR(mixed["0"], 0.5, 1e-12);
    EXPECT_NEAR(mixed["1"], 0.5, 1e-12);

    Matrix one = Matrix::Zero(2, 2);
    one(1, 1) = 1;
    Distribution flipped = distribution(c, DensityMatrix(one), placement);
    EXPECT_NEAR(flipped["1"], 1.0, 1e-12);
}

TEST(dense, channel_examples) {
    std::vector<uint32_t> data{0};
    Vector empty_env = Vector::Ones(1);
    Channel id = channel_of_circuit(Circuit{1, 0, {}}, data, empty_env);
    EXPECT_NEAR(process_fidelity(id.choi, Matrix::Identity(2, 2)), 1.0, 1e-14);

    std::vector<uint32_t> data1{1};
    Matrix s = Matrix::Identity(2, 2);
    s(1, 1) = kI;
    Channel fig2 = channel_of_circuit(parse_circuit(kFig2), data1, pi_over_2());
    EXPECT_NEAR(process_fidelity(fig2.choi, s), 1.0, 1e-12);

    Matrix t = Matrix::Identity(2, 2);
    t(1, 1) = std::polar(1.0, std::numbers::pi / 4);
    Channel fig3 = channel_of_circuit(parse_circuit(kFig3), data1, pi_over_4());
    EXPECT_NEAR(process_fidelity(fig3.choi, t), 1.0, 1e-12);
    ASSERT_EQ(fig3.branches.size(), 2u);
    for (const auto &[key, choi] : fig3.branches) {
        double weight = choi.trace().real();
        EXPECT_NEAR(weight, 0.5, 1e-12) << key;
        EXPECT_NEAR(process_fidelity(choi / weight, t), 1.0, 1e-12) << key;
    }
    // Without the correction the 1-branch applies T^dagger.
    Channel uncorrected = channel_of_circuit(parse_circuit("qubits 2\nCNOT 1 0\nM 0 -> c0\n"), data1, pi_over_4());
    EXPECT_LT(process_fidelity(uncorrected.choi, t), 0.99);
    EXPECT_GT(max_output_trace_distance(uncorrected.choi, fig3.choi), 0.1);
    EXPECT_LT(max_output_trace_distance(fig3.choi, fig3.choi), 1e-14);
}

TEST(dense, measurement_free_channels_are_unitary) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 30; trial++) {
        size_t n = 2 + rng() % 3;
        Circuit c{n, 0, {}};
        for (int k = 0; k < 20; k++) {
            c.instructions.push_back(GateOp{testing_util::random_gate(n, rng)});
        }
        std::vector<uint32_t> sys{0};
        Vector env = Vector::Zero(size_t{1} << (n - 1));
        env[0] = 1;
        Channel ch = channel_of_circuit(c, sys, env);
        double purity = (ch.choi * ch.choi).trace().real();
        EXPECT_LE(purity, 1 + 1e-10);
        // Gate application preserves the norm to 1e-12.
        PureRun r = simulate_pure(c, StateVector(random_state(n, rng)), 0);
        EXPECT_NEAR(r.state.amplitudes().norm(), 1.0, 1e-12);
        // Full-register channel of a gate-only circuit is rank one.
        std::vector<uint32_t> all;
        for (uint32_t q = 0; q < n; q++) {
            all.push_back(q);
        }
        Channel full = channel_of_circuit(c, all, Vector::Ones(1));
        EXPECT_NEAR((full.choi * full.choi).trace().real(), 1.0, 1e-10);
        EXPECT_NEAR(process_fidelity(full.choi, circuit_unitary(c)), 1.0, 1e-10);
    }
}

TEST(dense, density_matrix_validation) {
    Matrix bad = Matrix::Identity(2, 2);
    EXPECT_THROW(DensityMatrix{bad}, std::invalid_argument);
    Matrix nonherm = Matrix::Identity(2, 2) / 2.0;
    nonherm(0, 1) = 0.1;
    EXPECT_THROW(DensityMatrix{nonherm}, std::invalid_argument);
    Matrix negative = Matrix::Zero(2, 2);
    negative(0, 0) = 1.5;
    negative(1, 1) = -0.5;
    EXPECT_THROW(DensityMatrix{negative}, std::invalid_argument);
    std::mt19937_64 rng(1);
    for (size_t q = 1; q <= 3; q++) {
        EXPECT_NO_THROW(DensityMatrix{random_density(q, rng)});
        EXPECT_NO_THROW(DensityMatrix{random_density(q, rng, 1)});
    }
}

TEST(dense, clifford_recognition) {
    EXPECT_TRUE(is_clifford_unitary(gate_matrix(GateKind::H)));
    EXPECT_TRUE(is_clifford_unitary(gate_matrix(GateKind::CNOT)));
    EXPECT_TRUE(is_clifford_unitary(gate_matrix(GateKind::SQRT_X) * std::polar(1.0, 0.3)));
    EXPECT_FALSE(is_clifford_unitary(default_unitaries().at("T")));
}
