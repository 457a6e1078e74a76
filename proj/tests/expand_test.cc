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

#include "stabmagic/expand.h"

#include <gtest/gtest.h>

#include <random>

#include "stabmagic/stabsum.h"
#include "test_util.h"

namespace stabmagic {
namespace {

using testing_util::max_abs_diff;

size_t count_kind(const Circuit &c, GateKind kind) {
    size_t n = 0;
    for (const auto &inst : c.instructions) {
        if (const auto *g = std::get_if<GateOp>(&inst); g && g->gate.kind == kind) {
            n++;
        }
    }
    return n;
}

/// Sums out every bit past the original ones.
Distribution marginal(const Distribution &d, size_t bits) {
    Distribution out;
    for (const auto &[k, p] : d) {
        out[k.substr(0, bits)] += p;
    }
    return out;
}

TEST(ExpandGadgets, ThreeReusableSShareOneAncilla) {
    auto lib = GadgetLibrary::builtins();
    Circuit c = parse_circuit("qubits 2\nGADGET S_reusable 0\nGADGET S_reusable 1\nGADGET S_reusable 0\n");
    auto e = expand_gadgets(c, lib);
    EXPECT_EQ(e.circuit.num_qubits, 3u);
    ASSERT_EQ(e.ancillas.size(), 1u);
    EXPECT_EQ(e.ancillas[0].qubits, std::vector<uint32_t>{2});
    EXPECT_EQ(e.ancillas[0].uses, 3u);
    EXPECT_EQ(e.circuit.instructions.size(), 12u);
    EXPECT_EQ(count_kind(e.circuit, GateKind::CNOT), 6u);
    EXPECT_FALSE(e.circuit.has_non_clifford());
}

TEST(ExpandGadgets, TwoTGatesConsumeTwoAncillas) {
    auto lib = GadgetLibrary::builtins();
    Circuit c = parse_circuit("qubits 1\nH 0\nT 0\nT 0\n");
    auto e = expand_gadgets(c, lib);
    EXPECT_EQ(e.circuit.num_qubits, 3u);
    EXPECT_EQ(e.circuit.num_bits, 2u);
    ASSERT_EQ(e.ancillas.size(), 2u);
    EXPECT_EQ(e.placement(), (std::vector<uint32_t>{1, 2}));
    EXPECT_EQ(render_circuit(e.circuit),
              "qubits 3\nbits 2\nH 0\n"
              "CNOT 0 1\nM 1 -> c0\nIF c0 S 0\n"
              "CNOT 0 2\nM 2 -> c1\nIF c1 S 0\n");
}

TEST(ExpandGadgets, CliffordCircuitUnchanged) {
    auto lib = GadgetLibrary::builtins();
    Circuit c = parse_circuit("qubits 2\nbits 1\nH 0\nCNOT 0 1\nM 1 -> c0\nIF c0 X 0\n");
    auto e = expand_gadgets(c, lib);
    EXPECT_EQ(e.circuit, c);
    EXPECT_TRUE(e.ancillas.empty());
    EXPECT_EQ(e.ancilla_state().num_qubits(), 0u);
}

TEST(ExpandGadgets, Errors) {
    auto lib = GadgetLibrary::builtins();
    EXPECT_THROW(expand_gadgets(parse_circuit("qubits 1\nGADGET Foo 0\n"), lib), UnknownGadget);
    EXPECT_THROW(expand_gadgets(parse_circuit("qubits 2\nGADGET S_reusable 0 1\n"), lib), DimensionError);
}

Circuit random_gadget_circuit(size_t n, std::mt19937_64 &rng) {
    static const char *kNames[] = {"T", "S_reusable", "SqrtX_reusable", "SqrtY_reusable"};
    Circuit base = testing_util::random_feedback_circuit(n, 20, 3, rng);
    Circuit out{n, base.num_bits, {}};
    size_t t_count = 0;
    for (const auto &inst : base.instructions) {
        out.instructions.push_back(inst);
        if (rng() % 4 == 0) {
            std::string name = kNames[rng() % 4];
            if (name == "T" && t_count >= 2) {
                name = "S_reusable";
            }
            t_count += name == "T";
            out.instructions.push_back(NonCliffordOp{name, {static_cast<uint32_t>(rng() % n)}});
        }
    }
    return out;
}

TEST(ExpandGadgets, PreservesSemanticsAgainstClaimedUnitaries) {
    auto lib = GadgetLibrary::builtins();
    auto table = lib.unitaries();
    std::mt19937_64 rng(17);
    int checked = 0;
    for (int trial = 0; trial < 80; trial++) {
        size_t n = 1 + rng() % 5;
        Circuit c = random_gadget_circuit(n, rng);
        auto e = expand_gadgets(c, lib);
        EXPECT_FALSE(e.circuit.has_non_clifford());
        if (e.circuit.num_qubits > 9) {
            continue;
        }
        Distribution reference = distribution(c, StateVector(n), table);
        auto placement = e.placement();
        Distribution expanded = distribution(e.circuit, e.ancilla_state(), placement);
        EXPECT_LE(max_abs_diff(marginal(expanded, c.num_bits), reference), 1e-9) << render_circuit(c);
        if (e.ancilla_qubit_count() <= 2) {
            auto m = StabMixture::init(e.circuit, e.ancilla_state(), placement);
            EXPECT_LE(max_abs_diff(exact_distribution(m, e.circuit), expanded), 1e-9);
        }
        checked++;
    }
    EXPECT_GE(checked, 60);
}

TEST(ExpandGadgets, AncillaMapJson) {
    auto lib = GadgetLibrary::builtins();
    auto e = expand_gadgets(parse_circuit("qubits 1\nT 0\nGADGET S_reusable 0\n"), lib);
    auto j = ancilla_map_to_json(e);
    ASSERT_EQ(j.size(), 2u);
    EXPECT_EQ(j[0]["gadget"], "T_inject");
    EXPECT_EQ(j[1]["qubits"], nlohmann::json::array({2}));
    EXPECT_EQ(j[1]["reusable"], true);
}

}  // namespace
}  // namespace stabmagic
