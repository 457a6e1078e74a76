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

#include "stabmagic/gadget_search.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <unordered_set>

#include "stabmagic/gadget_lib.h"

namespace stabmagic {
namespace {

CliffordElement element_of(size_t n, std::vector<CliffordGate> gates) {
    CliffordElement e{n, clifford_images(n, gates), 0, std::move(gates)};
    e.canonical_id = canonical_id(e.images);
    return e;
}

bool equal_up_to_phase(const Matrix &a, const Matrix &b, double tol = 1e-9) {
    return std::abs((a.adjoint() * b).trace()) / static_cast<double>(a.rows()) > 1 - tol;
}

std::array<double, 3> bloch(const Vector &m) {
    Complex ab = std::conj(m[0]) * m[1];
    return {2 * ab.real(), 2 * ab.imag(), std::norm(m[0]) - std::norm(m[1])};
}

double distance(const std::array<double, 3> &a, const std::array<double, 3> &b) {
    return std::hypot(a[0] - b[0], a[1] - b[1], a[2] - b[2]);
}

const std::vector<CliffordElement> &group2() {
    static const auto g = enumerate_group(2);
    return g;
}

TEST(EnumerateGroup, Orders) {
    EXPECT_EQ(enumerate_group(1).size(), 24u);
    EXPECT_EQ(group2().size(), 11520u);
    EXPECT_EQ(clifford_group_order(1), 24u);
    EXPECT_EQ(clifford_group_order(2), 11520u);
    EXPECT_THROW(enumerate_group(3), std::invalid_argument);
}

TEST(EnumerateGroup, IdentityFirstWithEmptyWitness) {
    const auto &g = group2();
    EXPECT_TRUE(g[0].witness.empty());
    EXPECT_TRUE(g[0].unitary().isIdentity(1e-15));
}

TEST(EnumerateGroup, IdsUniqueAndWitnessesConsistent) {
    std::unordered_set<uint64_t> ids;
    for (const auto &e : group2()) {
        EXPECT_TRUE(ids.insert(e.canonical_id).second);
        EXPECT_EQ(canonical_id(clifford_images(2, e.witness)), e.canonical_id);
    }
}

TEST(EnumerateGroup, ImagesPreserveCommutation) {
    for (const auto &e : group2()) {
        for (size_t a = 0; a < 4; a++) {
            EXPECT_TRUE(e.images[a].hermitian());
            for (size_t b = a + 1; b < 4; b++) {
                bool anti = (a / 2 == b / 2);
                EXPECT_EQ(commutes(e.images[a], e.images[b]), !anti);
            }
        }
    }
}

TEST(EnumerateGroup, ClosureOnRandomPairs) {
    const auto &g = group2();
    std::unordered_set<uint64_t> ids;
    for (const auto &e : g) {
        ids.insert(e.canonical_id);
    }
    std::mt19937_64 rng(4);
    for (int k = 0; k < 1000; k++) {
        const auto &a = g[rng() % g.size()];
        const auto &b = g[rng() % g.size()];
        std::vector<CliffordGate> word = a.witness;
        word.insert(word.end(), b.witness.begin(), b.witness.end());
        EXPECT_TRUE(ids.count(canonical_id(clifford_images(2, word))));
    }
}

TEST(EnumerateGroup, DistinctIdsAreDistinctUnitaries) {
    const auto &g = group2();
    std::mt19937_64 rng(12);
    for (int k = 0; k < 300; k++) {
        size_t i = rng() % g.size(), j = rng() % g.size();
        if (i == j) {
            continue;
        }
        EXPECT_FALSE(equal_up_to_phase(g[i].unitary(), g[j].unitary()));
    }
}

TEST(EnumerateGroup, ImagesMatchDenseConjugation) {
    const auto &g = group2();
    for (size_t i = 0; i < g.size(); i += 97) {
        Matrix u = g[i].unitary();
        for (size_t q = 0; q < 2; q++) {
            for (size_t l = 0; l < 2; l++) {
                PauliString gen = PauliString::single(2, q, l ? 'Z' : 'X');
                Matrix expect = u * pauli_matrix(gen) * u.adjoint();
                EXPECT_LE((pauli_matrix(g[i].images[2 * q + l]) - expect).norm(), 1e-12);
            }
        }
    }
}

TEST(SolveReusable, IdentityIsFullSphere) {
    auto r = solve_reusable(group2()[0]);
    EXPECT_EQ(r.family, FamilyKind::FullSphere);
    ASSERT_FALSE(r.solutions.empty());
    for (const auto &s : r.solutions) {
        EXPECT_TRUE(s.clifford);
        EXPECT_TRUE(equal_up_to_phase(s.unitary, Matrix::Identity(2, 2)));
    }
}

TEST(SolveReusable, ControlledZHasTwoBasisSolutions) {
    auto r = solve_reusable(element_of(2, {CliffordGate::two(GateKind::CZ, 0, 1)}));
    EXPECT_EQ(r.family, FamilyKind::None);
    EXPECT_FALSE(r.inconclusive);
    ASSERT_EQ(r.solutions.size(), 2u);
    Matrix z = gate_matrix(GateKind::Z);
    for (const auto &s : r.solutions) {
        EXPECT_TRUE(s.clifford);
        EXPECT_LE(s.residual, 1e-10);
        if (s.bloch[2] > 0) {
            EXPECT_NEAR(s.bloch[2], 1, 1e-9);
            EXPECT_TRUE(equal_up_to_phase(s.unitary, Matrix::Identity(2, 2)));
        } else {
            EXPECT_NEAR(s.bloch[2], -1, 1e-9);
            EXPECT_TRUE(equal_up_to_phase(s.unitary, z));
        }
    }
}

TEST(SolveReusable, FigureTwoCompositeFindsPhaseState) {
    auto body = builtin_gadget("S_reusable").body();
    std::vector<CliffordGate> gates;
    for (const auto &inst : body.instructions) {
        gates.push_back(std::get<GateOp>(inst).gate);
    }
    auto r = solve_reusable(element_of(2, gates));
    EXPECT_EQ(r.family, FamilyKind::None);
    const std::array<double, 3> plus_i = {0, 1, 0};
    bool found = false;
    for (const auto &s : r.solutions) {
        if (distance(s.bloch, plus_i) < 1e-6) {
            found = true;
            EXPECT_LE(s.residual, 1e-10);
            EXPECT_TRUE(s.clifford);
            EXPECT_TRUE(equal_up_to_phase(s.unitary, gate_matrix(GateKind::S)));
        }
    }
    EXPECT_TRUE(found);
}

TEST(SolveReusable, ResidualFormulaMatchesVerifier) {
    // A reusable |M> must leave the data transformed by A_M and the ancilla intact.
    auto g = builtin_gadget("S_reusable");
    Matrix c = circuit_unitary(g.body());
    EXPECT_LE(reusability_residual(c, *g.ancilla_pure()), 1e-14);
    Vector plus(2);
    plus << 1 / std::numbers::sqrt2, 1 / std::numbers::sqrt2;
    EXPECT_GT(reusability_residual(c, plus), 0.1);
}

class SampledElements : public ::testing::Test {
   protected:
    static std::vector<SearchResult> &results() {
        static std::vector<SearchResult> r = [] {
            std::vector<SearchResult> out;
            const auto &g = group2();
            for (size_t i = 0; i < g.size(); i += 37) {
                out.push_back(solve_reusable(g[i]));
            }
            return out;
        }();
        return r;
    }
};

TEST_F(SampledElements, NoNonCliffordSolutions) {
    for (const auto &r : results()) {
        EXPECT_FALSE(r.inconclusive) << r.clifford_id;
        for (const auto &s : r.solutions) {
            EXPECT_TRUE(s.clifford);
            EXPECT_LE(s.residual, kSolutionResidual);
        }
    }
}

TEST_F(SampledElements, SolutionsPassGadgetVerifier) {
    const auto &g = group2();
    std::map<uint64_t, const CliffordElement *> by_id;
    for (const auto &e : g) {
        by_id[e.canonical_id] = &e;
    }
    int verified = 0;
    for (const auto &r : results()) {
        const auto &e = *by_id.at(r.clifford_id);
        for (const auto &s : r.solutions) {
            GadgetDef gadget("found", StateVector(s.ancilla.normalized()), e.witness_circuit(), s.unitary, true);
            VerifyOptions opts;
            opts.tolerance = 1e-8;
            opts.random_inputs = 10;
            auto report = verify_gadget(gadget, opts);
            EXPECT_TRUE(report.passed) << r.clifford_id;
            verified++;
        }
    }
    EXPECT_GT(verified, 0);
}

TEST_F(SampledElements, NonSolutionsHaveLargeResidual) {
    const auto &g = group2();
    std::map<uint64_t, const CliffordElement *> by_id;
    for (const auto &e : g) {
        by_id[e.canonical_id] = &e;
    }
    std::mt19937_64 rng(31);
    int probes = 0;
    for (const auto &r : results()) {
        if (r.family != FamilyKind::None || r.solutions.empty()) {
            continue;
        }
        Matrix c = by_id.at(r.clifford_id)->unitary();
        for (int k = 0; k < 100; k++) {
            Vector m = random_state(1, rng);
            auto b = bloch(m);
            bool near = false;
            for (const auto &s : r.solutions) {
                near = near || distance(s.bloch, b) < 0.1;
            }
            if (near) {
                continue;
            }
            EXPECT_GT(reusability_residual(c, m), 1e-4);
            probes++;
        }
    }
    EXPECT_GT(probes, 1000);
}

TEST(Survey, SingleQubitIsDegenerate) {
    auto r = survey(1);
    EXPECT_EQ(r.group_size, 24u);
    EXPECT_EQ(r.solved, 24u);
    EXPECT_EQ(r.non_clifford_count, 0u);
    EXPECT_EQ(r.induced.size(), 24u);
    auto j = to_json(r);
    EXPECT_EQ(j["group_size"], 24);
    EXPECT_EQ(j["non_clifford_count"], 0);
}

TEST(RandomElement, ThreeQubitBodiesAreSupported) {
    std::mt19937_64 rng(2);
    for (int k = 0; k < 5; k++) {
        auto e = random_element(3, rng);
        auto r = solve_reusable(e);
        for (const auto &s : r.solutions) {
            EXPECT_TRUE(s.clifford);
        }
    }
}

TEST(PauliAction, NamesCliffordsOnly) {
    EXPECT_EQ(pauli_action(gate_matrix(GateKind::S)), "X->+Y,Z->+Z");
    EXPECT_EQ(pauli_action(gate_matrix(GateKind::H)), "X->+Z,Z->+X");
    Matrix t = Matrix::Identity(2, 2);
    t(1, 1) = std::polar(1.0, std::numbers::pi / 4);
    EXPECT_EQ(pauli_action(t), "");
}

}  // namespace
}  // namespace stabmagic
