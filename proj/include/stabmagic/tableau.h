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

#ifndef STABMAGIC_TABLEAU_H
#define STABMAGIC_TABLEAU_H

#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "stabmagic/clifford_gate.h"
#include "stabmagic/pauli_string.h"

namespace stabmagic {

/// The six single-qubit stabilizer states |0>, |1>, |+>, |->, |i>, |-i>.
enum class FrameLabel : uint8_t { ZPlus, ZMinus, XPlus, XMinus, YPlus, YMinus };

/// "Z+", "Z-", "X+", "X-", "Y+", "Y-".
std::string_view frame_label_name(FrameLabel label);
std::optional<FrameLabel> frame_label_from_name(std::string_view name);

struct MeasureOutcome {
    bool bit;
    /// Probability of `bit` before the measurement: 0, 1/2 or 1. A forced
    /// outcome with probability 0 leaves the tableau untouched.
    double probability;
};

/// Aaronson-Gottesman stabilizer tableau with destabilizers.
///
/// Row i < n is destabilizer i, row n + i is stabilizer i. Stabilizer phases
/// stay in {0, 2}.
class Tableau {
   public:
    /// Product state of the given frame labels, one per qubit.
    explicit Tableau(std::span<const FrameLabel> labels);
    /// |0...0>.
    explicit Tableau(size_t num_qubits);

    size_t num_qubits() const {
        return n_;
    }
    const PauliString &destabilizer(size_t i) const {
        return rows_[i];
    }
    const PauliString &stabilizer(size_t i) const {
        return rows_[n_ + i];
    }

    /// Throws std::out_of_range on a bad target.
    void apply(const CliffordGate &gate);

    /// Probability of reading 1 from qubit `q` in the Z basis: 0, 1/2 or 1.
    double probability_of_one(size_t q) const;

    /// Samples a Z measurement.
    MeasureOutcome measure_z(size_t q, std::mt19937_64 &rng);
    /// Collapses onto `forced`. Returns probability 0 (and no change) when the
    /// forced branch is impossible.
    MeasureOutcome measure_z(size_t q, bool forced);

    /// Tr(P rho) for Hermitian P: +1 or -1 if +-P is a stabilizer, else 0.
    int expectation(const PauliString &p) const;

    /// Checks the commutation pairing and stabilizer signs. Returns an empty
    /// string when valid, otherwise a description of the first violation.
    std::string validate() const;

    /// One generator per line: destabilizers, then stabilizers.
    std::string dump() const;

   private:
    MeasureOutcome collapse(size_t q, bool bit, size_t pivot);
    bool deterministic_bit(size_t q) const;
    std::optional<size_t> random_pivot(size_t q) const;

    size_t n_;
    std::vector<PauliString> rows_;
};

Tableau new_tableau(std::span<const FrameLabel> labels);
int expectation_pauli(const Tableau &t, const PauliString &p);

}  // namespace stabmagic

#endif
