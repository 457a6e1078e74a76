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

#include "stabmagic/tableau.h"

#include <random>

#include "gtest/gtest.h"
#include "stabmagic/dense.h"
#include "test_util.h"

using namespace stabmagic;

namespace {

PauliString P(const char *text) {
    return PauliString::from_text(text);
}

void collect(const std::vector<CliffordGate> &gates, const std::vector<uint32_t> &measured, size_t k, Tableau t,
             double prob, std::string &key, Distribution &out) {
    if (k == measured.size()) {
        out[key] += prob;
        return;
    }
    for (bool b : {false, true}) {
        Tableau branch = t;
        MeasureOutcome r = branch.measure_z(measured[k], b);
        if (r.probability > 0) {
            key.push_back(b ? '1' : '0');
            collect(gates, measured, k + 1, branch, prob * r.probability, key, out);
            key.pop_back();
        }
    }
}

}  // namespace

TEST(tableau, frame_states) {
    std::vector<FrameLabel> z{FrameLabel::ZPlus};
    Tableau t0 = new_tableau(z);
    EXPECT_EQ(t0.stabilizer(0), P("+Z"));

    std::vector<FrameLabel> xz{FrameLabel::XPlus, FrameLabel::ZPlus};
    Tableau t1 = new_tableau(xz);
    EXPECT_EQ(t1.expectation(P("XI")), 1);
    EXPECT_EQ(t1.expectation(P("IZ")), 1);

    std::vector<FrameLabel> ym{FrameLabel::YMinus};
    Tableau t2 = new_tableau(ym);
    EXPECT_EQ(expectation_pauli(t2, P("Y")), -1);

    EXPECT_THROW(new_tableau(std::vector<FrameLabel>{}), std::invalid_argument);
}

TEST(tableau, every_label_measures_its_own_sign) {
    const std::pair<FrameLabel, const char *> cases[] = {
        {FrameLabel::ZPlus, "+Z"}, {FrameLabel::ZMinus, "-Z"}, {FrameLabel::XPlus, "+X"},
        {FrameLabel::XMinus, "-X"}, {FrameLabel::YPlus, "+Y"}, {FrameLabel::YMinus, "-Y"},
    };
    for (auto [label, stab] : cases) {
        std::vector<FrameLabel> labels{label};
        Tableau t(labels);
        EXPECT_EQ(t.stabilizer(0), P(stab)) << frame_label_name(label);
        EXPECT_EQ(t.validate(), "");
        // Agrees with the dense frame state.
        Vector v = frame_state(label);
        Matrix rho = v * v.adjoint();
        for (const char *axis : {"X", "Y", "Z"}) {
            double dense = (pauli_matrix(P(axis)) * rho).trace().real();
            EXPECT_NEAR(t.expectation(P(axis)), dense, 1e-12);
        }
    }
}

TEST(tableau, gate_examples) {
    Tableau t(1);
    t.apply(CliffordGate::one(GateKind::H, 0));
    EXPECT_EQ(t.stabilizer(0), P("+X"));

    Tableau bell(2);
    bell.apply(CliffordGate::one(GateKind::H, 0));
    bell.apply(CliffordGate::two(GateKind::CNOT, 0, 1));
    EXPECT_EQ(bell.expectation(P("XX")), 1);
    EXPECT_EQ(bell.expectation(P("ZZ")), 1);
    EXPECT_EQ(bell.expectation(P("YY")), -1);
    EXPECT_EQ(bell.expectation(P("XI")), 0);

    std::vector<FrameLabel> plus{FrameLabel::XPlus};
    Tableau y(plus);
    y.apply(CliffordGate::one(GateKind::S, 0));
    EXPECT_EQ(y.stabilizer(0), P("+Y"));

    EXPECT_THROW(t.apply(CliffordGate::one(GateKind::H, 1)), std::out_of_range);
    EXPECT_THROW(bell.expectation(P("X")), DimensionError);
}

TEST(tableau, expectation_examples) {
    Tableau t(1);
    EXPECT_EQ(t.expectation(P("Z")), 1);
    EXPECT_EQ(t.expectation(P("X")), 0);
    EXPECT_EQ(t.expectation(P("-Z")), -1);
    EXPECT_EQ(t.expectation(P("I")), 1);
}

TEST(tableau, measurement_examples) {
    std::mt19937_64 rng(1);
    Tableau zero(1);
    MeasureOutcome r = zero.measure_z(0, rng);
    EXPECT_FALSE(r.bit);
    EXPECT_EQ(r.probability, 1.0);

    std::vector<FrameLabel> plus{FrameLabel::XPlus};
    for (int trial = 0; trial < 20; trial++) {
        Tableau t(plus);
        MeasureOutcome first = t.measure_z(0, rng);
        EXPECT_EQ(first.probability, 0.5);
        MeasureOutcome again = t.measure_z(0, rng);
        EXPECT_EQ(again.bit, first.bit);
        EXPECT_EQ(again.probability, 1.0);
        EXPECT_EQ(t.validate(), "");
    }

    for (int trial = 0; trial < 20; trial++) {
        Tableau bell(2);
        bell.apply(CliffordGate::one(GateKind::H, 0));
        bell.apply(CliffordGate::two(GateKind::CNOT, 0, 1));
        MeasureOutcome a = bell.measure_z(0, rng);
        MeasureOutcome b = bell.measure_z(1, rng);
        EXPECT_EQ(a.bit, b.bit);
        EXPECT_EQ(b.probability, 1.0);
    }
}

TEST(tableau, forced_measurement_signals_dead_branch) {
    Tableau t(2);
    std::string before = t.dump();
    MeasureOutcome r = t.measure_z(1, true);
    EXPECT_EQ(r.probability, 0.0);
    EXPECT_EQ(t.dump(), before);
    EXPECT_EQ(t.measure_z(1, false).probability, 1.0);
    EXPECT_EQ(t.probability_of_one(1), 0.0);

    t.apply(CliffordGate::one(GateKind::H, 0));
    EXPECT_EQ(t.probability_of_one(0), 0.5);
    EXPECT_EQ(t.measure_z(0, true).probability, 0.5);
    EXPECT_EQ(t.probability_of_one(0), 1.0);
}

TEST(tableau, dump_format) {
    Tableau t(2);
    EXPECT_EQ(t.dump(), "+XI\n+IX\n+ZI\n+IZ\n");
}

TEST(tableau, invariants_hold_after_random_circuits) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; trial++) {
        size_t n = 1 + rng() % 12;
        Tableau t(n);
        for (int step = 0; step < 60; step++) {
            if (rng() % 5 == 0) {
                t.measure_z(rng() % n, rng);
            } else {
                t.apply(testing_util::random_gate(n, rng));
            }
        }
        ASSERT_EQ(t.validate(), "");
    }
}

TEST(tableau, measurement_is_reproducible_with_fixed_seed) {
    auto run = [](uint64_t seed) {
        std::mt19937_64 gates(99);
        std::mt19937_64 rng(seed);
        Tableau t(20);
        std::string bits;
        for (int step = 0; step < 400; step++) {
            if (step % 7 == 0) {
                bits.push_back(t.measure_z(gates() % 20, rng).bit ? '1' : '0');
            } else {
                t.apply(testing_util::random_gate(20, gates));
            }
        }
        return bits;
    };
    EXPECT_EQ(run(42), run(42));
    EXPECT_NE(run(42), run(43));
}

TEST(tableau, distribution_matches_dense_oracle) {
    std::mt19937_64 rng(2024);
    double worst = 0;
    for (int trial = 0; trial < 200; trial++) {
        size_t n = 1 + rng() % 6;
        size_t depth = 1 + rng() % 40;
        std::vector<CliffordGate> gates;
        Circuit c{n, n, {}};
        for (size_t k = 0; k < depth; k++) {
            gates.push_back(testing_util::random_gate(n, rng));
            c.instructions.push_back(GateOp{gates.back()});
        }
        Tableau t(n);
        for (const auto &g : gates) {
            t.apply(g);
        }
        std::vector<uint32_t> measured;
        for (uint32_t q = 0; q < n; q++) {
            measured.push_back(q);
            c.instructions.push_back(MeasureOp{q, q});
        }
        Distribution ours;
        std::string key;
        collect(gates, measured, 0, t, 1.0, key, ours);
        Distribution oracle = distribution(c, StateVector(n));
        worst = std::max(worst, testing_util::max_abs_diff(ours, oracle));
    }
    EXPECT_LE(worst, 1e-9);
}
