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

#include "stabmagic/gadget_lib.h"

#include <gtest/gtest.h>

#include <numbers>

namespace stabmagic {
namespace {

Matrix diag(Complex a, Complex b) {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = a;
    m(1, 1) = b;
    return m;
}

bool equal_up_to_phase(const Matrix &a, const Matrix &b) {
    return std::abs((a.adjoint() * b).trace()) / static_cast<double>(a.rows()) > 1 - 1e-12;
}

Vector plus_state() {
    Vector v(2);
    v << 1 / std::numbers::sqrt2, 1 / std::numbers::sqrt2;
    return v;
}

TEST(Builtins, ClaimedUnitaries) {
    EXPECT_LE((builtin_gadget("S_reusable").claimed_unitary() - diag(1, Complex(0, 1))).norm(), 1e-15);
    EXPECT_LE((builtin_gadget("T_inject").claimed_unitary() - diag(1, std::polar(1.0, std::numbers::pi / 4))).norm(),
              1e-15);
    Matrix h = gate_matrix(GateKind::H);
    Matrix hsh = h * gate_matrix(GateKind::S) * h;
    EXPECT_LE((builtin_gadget("SqrtX_reusable").claimed_unitary() - hsh).norm(), 1e-15);
    EXPECT_TRUE(equal_up_to_phase(hsh, gate_matrix(GateKind::SQRT_X)));
    Matrix sy = builtin_gadget("SqrtY_reusable").claimed_unitary();
    Matrix y = pauli_matrix(PauliString::from_text("Y"));
    EXPECT_TRUE(equal_up_to_phase(sy * sy, y));
}

TEST(Builtins, ReusableFlagsAndAncillas) {
    EXPECT_FALSE(builtin_gadget("T_inject").reusable());
    for (const char *name : {"S_reusable", "SqrtX_reusable", "SqrtY_reusable"}) {
        auto g = builtin_gadget(name);
        EXPECT_TRUE(g.reusable()) << name;
        EXPECT_EQ(g.ancilla_qubits(), 1u);
        EXPECT_EQ(g.data_qubits(), 1u);
        ASSERT_TRUE(g.ancilla_pure());
        EXPECT_NEAR(std::abs((*g.ancilla_pure())[1] - Complex(0, 1 / std::numbers::sqrt2)), 0, 1e-15);
    }
}

TEST(Builtins, UnknownName) {
    EXPECT_THROW(builtin_gadget("Toffoli"), UnknownGadget);
}

TEST(Builtins, SBodyIsTheTwoCnotTwoHadamardCircuit) {
    EXPECT_EQ(render_circuit(builtin_gadget("S_reusable").body()), "qubits 2\nCNOT 1 0\nH 0\nCNOT 1 0\nH 0\n");
    EXPECT_EQ(render_circuit(builtin_gadget("T_inject").body()),
              "qubits 2\nbits 1\nCNOT 1 0\nM 0 -> c0\nIF c0 S 1\n");
}

TEST(VerifyGadget, ReusableS) {
    auto r = verify_gadget(builtin_gadget("S_reusable"));
    EXPECT_TRUE(r.passed);
    EXPECT_GE(r.unitary_match, 1 - 1e-12);
    ASSERT_TRUE(r.ancilla_restored);
    EXPECT_GE(*r.ancilla_restored, 1 - 1e-12);
    EXPECT_LE(r.leakage, 1e-12);
    EXPECT_FALSE(r.uses_target_gate);
    EXPECT_EQ(r.inputs_checked, 106u);
}

TEST(VerifyGadget, TInjectionBothBranches) {
    auto r = verify_gadget(builtin_gadget("T_inject"));
    EXPECT_TRUE(r.passed);
    EXPECT_GE(r.unitary_match, 1 - 1e-12);
    ASSERT_EQ(r.branch_fidelity.size(), 2u);
    EXPECT_GE(r.branch_fidelity["0"], 1 - 1e-12);
    EXPECT_GE(r.branch_fidelity["1"], 1 - 1e-12);
    EXPECT_FALSE(r.ancilla_restored);
}

TEST(VerifyGadget, SqrtXAndComposedSqrtY) {
    for (const char *name : {"SqrtX_reusable", "SqrtY_reusable"}) {
        auto r = verify_gadget(builtin_gadget(name));
        EXPECT_TRUE(r.passed) << name;
        EXPECT_GE(r.unitary_match, 1 - 1e-12) << name;
        EXPECT_GE(*r.ancilla_restored, 1 - 1e-12) << name;
        EXPECT_LE(r.leakage, 1e-12) << name;
    }
}

TEST(VerifyGadget, CorruptedAncillaLeaks) {
    auto s = builtin_gadget("S_reusable");
    GadgetDef bad("S_corrupt", StateVector(plus_state()), s.body(), s.claimed_unitary(), true);
    auto r = verify_gadget(bad);
    EXPECT_FALSE(r.passed);
    EXPECT_GT(r.leakage, 0.01);
}

TEST(VerifyGadget, WrongClaimFails) {
    auto s = builtin_gadget("S_reusable");
    GadgetDef bad("S_as_T", StateVector(*s.ancilla_pure()), s.body(), builtin_gadget("T_inject").claimed_unitary(),
                  true);
    auto r = verify_gadget(bad);
    EXPECT_FALSE(r.passed);
    EXPECT_LT(r.unitary_match, 0.99);
}

TEST(VerifyGadget, FlagsBodiesThatUseTheTargetGate) {
    Circuit body = parse_circuit("qubits 2\nS 1\n");
    GadgetDef cheat("S_cheat", StateVector(plus_state()), body, gate_matrix(GateKind::S), true);
    auto r = verify_gadget(cheat);
    EXPECT_TRUE(r.uses_target_gate);
    EXPECT_TRUE(r.passed);
    GadgetDef inverse("Sdg_cheat", StateVector(plus_state()), body, gate_matrix(GateKind::S_DAG), true);
    EXPECT_TRUE(verify_gadget(inverse).uses_target_gate);
}

TEST(VerifyGadget, MixedAncillaUsesPurification) {
    // A trivially reusable gadget: the body ignores a maximally mixed ancilla.
    Circuit body = parse_circuit("qubits 2\nH 1\n");
    GadgetDef g("H_idle", DensityMatrix::maximally_mixed(1), body, gate_matrix(GateKind::H), true);
    auto r = verify_gadget(g);
    EXPECT_TRUE(r.passed);
    EXPECT_GE(*r.ancilla_restored, 1 - 1e-12);
}

TEST(GadgetDef, RejectsInvalidDefinitions) {
    Vector anc = plus_state();
    Matrix s = gate_matrix(GateKind::S);
    EXPECT_THROW(GadgetDef("x", StateVector(anc), parse_circuit("qubits 2\nT 1\n"), s, true), GadgetError);
    EXPECT_THROW(GadgetDef("x", StateVector(anc), parse_circuit("qubits 2\nM 0 -> c0\n"), s, true), GadgetError);
    EXPECT_THROW(GadgetDef("x", StateVector(anc), parse_circuit("qubits 1\n"), s, true), GadgetError);
    EXPECT_THROW(GadgetDef("x", StateVector(anc), parse_circuit("qubits 2\n"), Matrix::Ones(2, 2), true), GadgetError);
    EXPECT_THROW(GadgetDef("x", StateVector(anc), parse_circuit("qubits 3\n"), s, true), GadgetError);
    EXPECT_NO_THROW(GadgetDef("x", StateVector(anc), parse_circuit("qubits 2\nM 0 -> c0\n"), s, false));
}

TEST(GadgetLibrary, AliasesAndUnitaries) {
    auto lib = GadgetLibrary::builtins();
    EXPECT_EQ(&lib.get("T"), &lib.get("T_inject"));
    EXPECT_EQ(lib.find("nope"), nullptr);
    EXPECT_THROW(lib.get("nope"), UnknownGadget);
    auto table = lib.unitaries();
    EXPECT_EQ(table.size(), 5u);
    EXPECT_TRUE(table.count("T"));
}

TEST(GadgetJson, RoundTripPreservesVerification) {
    for (const char *name : {"S_reusable", "T_inject", "SqrtY_reusable"}) {
        auto g = builtin_gadget(name);
        auto back = gadget_from_json(nlohmann::json::parse(gadget_to_json(g).dump()));
        EXPECT_EQ(back.name(), g.name());
        EXPECT_EQ(back.body(), g.body());
        EXPECT_EQ(back.reusable(), g.reusable());
        EXPECT_LE((back.claimed_unitary() - g.claimed_unitary()).norm(), 1e-15);
        EXPECT_TRUE(verify_gadget(back).passed);
    }
}

TEST(GadgetJson, MixedAncillaAndErrors) {
    GadgetDef g("H_idle", DensityMatrix::maximally_mixed(1), parse_circuit("qubits 2\nH 1\n"),
                gate_matrix(GateKind::H), true);
    auto j = gadget_to_json(g);
    auto back = gadget_from_json(j);
    EXPECT_FALSE(back.ancilla_pure());
    j["ancilla_qubits"] = 2;
    EXPECT_THROW(gadget_from_json(j), GadgetError);
    j.erase("body");
    EXPECT_THROW(gadget_from_json(j), GadgetError);
}

TEST(StateFidelity, PureAndMixed) {
    Matrix zero = Matrix::Zero(2, 2);
    zero(0, 0) = 1;
    Matrix mixed = Matrix::Identity(2, 2) / 2.0;
    EXPECT_NEAR(state_fidelity(zero, zero), 1, 1e-12);
    EXPECT_NEAR(state_fidelity(zero, mixed), 0.5, 1e-12);
    EXPECT_NEAR(state_fidelity(mixed, mixed), 1, 1e-12);
}

}  // namespace
}  // namespace stabmagic
