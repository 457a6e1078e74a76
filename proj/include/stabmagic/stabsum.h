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

#ifndef STABMAGIC_STABSUM_H
#define STABMAGIC_STABSUM_H

// Simulation of an all-Clifford circuit whose only non-stabilizer input is a
// small ancilla register. The ancilla density matrix is written as a signed
// sum of stabilizer-frame product states; each term lives in its own tableau
// and every term sees the same gates and the same sampled measurement bits.
// Cost is (term count) x (tableau cost), and the term count never grows.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "json.hpp"
#include "stabmagic/circuit.h"
#include "stabmagic/dense.h"
#include "stabmagic/magic_decomp.h"
#include "stabmagic/tableau.h"

namespace stabmagic {

/// Mixture probabilities left [-1e-9, 1 + 1e-9]: a non-physical ancilla or a
/// bug.
struct InvalidMixtureState : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The circuit still contains non-Clifford instructions.
struct NotExpandedError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline constexpr double kMixtureProbabilityTolerance = 1e-9;

struct MixtureTerm {
    double weight;
    Tableau tableau;
};

class StabMixture {
   public:
    /// One tableau per frame term of `ancilla_rho`: frame labels on
    /// `placement`, |0> on every other qubit of `c`.
    static StabMixture init(const Circuit &c, const DensityMatrix &ancilla_rho, std::span<const uint32_t> placement);
    static StabMixture from_frame(const Circuit &c, const StabFrameDecomposition &frame,
                                  std::span<const uint32_t> placement);

    const std::vector<MixtureTerm> &terms() const {
        return terms_;
    }
    size_t num_data_qubits() const {
        return num_data_;
    }
    size_t num_ancilla_qubits() const {
        return num_ancilla_;
    }
    size_t initial_term_count() const {
        return initial_terms_;
    }
    double weight_sum() const;

    void apply(const CliffordGate &gate);
    /// Same as applying `gates` in order, but term by term.
    void apply(std::span<const CliffordGate> gates);

    /// sum_k w_k p_k(1), checked against the physical range and clamped.
    double probability_of_one(uint32_t qubit) const;

    /// Forces every term onto `bit`, reweights by p_k(bit) / p(bit) and drops
    /// dead terms. Returns p(bit); returns 0 without touching the mixture
    /// when the branch is impossible.
    double condition(uint32_t qubit, bool bit);

   private:
    StabMixture() = default;

    std::vector<MixtureTerm> terms_;
    size_t num_data_ = 0;
    size_t num_ancilla_ = 0;
    size_t initial_terms_ = 0;
};

/// Classical bits c0..c{m-1}; unwritten bits read 0.
using OutcomeRecord = std::vector<uint8_t>;

/// One shot: gates on every term, each measurement bit sampled from the
/// mixture-level probability and forced into every term.
OutcomeRecord run_sample(StabMixture m, const Circuit &c, uint64_t seed);

/// Every outcome branch, with probabilities from the per-branch weights.
Distribution exact_distribution(const StabMixture &m, const Circuit &c, size_t max_measurements = 16);

nlohmann::json record_to_json(const OutcomeRecord &record);
nlohmann::json distribution_to_json(const Distribution &d);

}  // namespace stabmagic

#endif
