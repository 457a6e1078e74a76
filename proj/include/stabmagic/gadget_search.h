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

#ifndef STABMAGIC_GADGET_SEARCH_H
#define STABMAGIC_GADGET_SEARCH_H

// Search for reusable magic states. A Clifford C on (ancilla, data) with a
// one-qubit ancilla |M> induces A_M = (<M| (x) I) C (|M> (x) I) on the data;
// |M> is reusable for C exactly when A_M is unitary.

#include <array>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "stabmagic/clifford_gate.h"
#include "stabmagic/dense.h"
#include "stabmagic/pauli_string.h"

namespace stabmagic {

struct CliffordElement {
    size_t num_qubits = 0;
    /// Images of X_0, Z_0, X_1, Z_1, ... under conjugation.
    std::vector<PauliString> images;
    /// Packed images and signs; unique per element modulo global phase.
    uint64_t canonical_id = 0;
    /// Gates (in time order) realizing the element.
    std::vector<CliffordGate> witness;

    Circuit witness_circuit() const;
    Matrix unitary() const;
};

/// Images of the generators under the gate sequence.
std::vector<PauliString> clifford_images(size_t num_qubits, std::span<const CliffordGate> gates);
uint64_t canonical_id(std::span<const PauliString> images);

/// Breadth-first closure over H_i, S_i and CNOT_ij. n is 1 or 2.
std::vector<CliffordElement> enumerate_group(size_t n);

/// 2^(n^2 + 2n) * prod_{j=1..n} (4^j - 1).
uint64_t clifford_group_order(size_t n);

/// Random element from a long random generator word; used for n = 3, where
/// enumeration is out of budget.
CliffordElement random_element(size_t n, std::mt19937_64 &rng, size_t word_length = 60);

inline constexpr double kSolutionResidual = 1e-8;
inline constexpr double kDedupDistance = 1e-6;

enum class FamilyKind { None, FullSphere, Continuous };

struct Solution {
    Vector ancilla;  // 2 amplitudes
    std::array<double, 3> bloch;
    Matrix unitary;
    double residual;
    bool clifford;
};

struct SearchResult {
    uint64_t clifford_id = 0;
    std::vector<Solution> solutions;
    FamilyKind family = FamilyKind::None;
    /// Near-solutions the optimizer could not drive below the residual bound.
    bool inconclusive = false;
    double best_residual = 0;
};

/// ||A_M^dagger A_M - I||_F with qubit 0 the ancilla.
double reusability_residual(const Matrix &c, const Vector &m);
/// A_M with qubit 0 the ancilla.
Matrix induced_map(const Matrix &c, const Vector &m);

struct SolverOptions {
    size_t grid_points = 400;
};

/// Finds every single-qubit ancilla state that makes C reusable. Element
/// qubit 0 is the ancilla; the rest are data.
SearchResult solve_reusable(const CliffordElement &c, const SolverOptions &options = {});

struct SurveyReport {
    size_t num_qubits = 0;
    size_t group_size = 0;
    size_t solved = 0;
    std::vector<uint64_t> inconclusive;
    size_t non_clifford_count = 0;
    size_t clifford_count = 0;
    /// Elements whose solutions form a continuum.
    std::vector<std::pair<uint64_t, FamilyKind>> families;
    /// Distinct induced unitaries up to phase, by Pauli action, with counts.
    std::map<std::string, size_t> induced;
    /// Fig.-2-type witness: some element induces S (or S^dagger) from |i>.
    bool has_s_type = false;
};

/// n = 1: every element is its own gadget with no ancilla. n = 2: one
/// ancilla and one data qubit over the whole group. `progress` is called
/// with (done, total) when set.
SurveyReport survey(size_t n, const std::function<void(size_t, size_t)> &progress = {});

/// Human-readable Pauli action of a Clifford unitary, e.g. "X->+Y,Z->+Z";
/// empty when `u` is not Clifford.
std::string pauli_action(const Matrix &u);

std::string family_name(FamilyKind kind);
nlohmann::json to_json(const SearchResult &r);
nlohmann::json to_json(const SurveyReport &r);
nlohmann::json group_to_json(const std::vector<CliffordElement> &elements);

}  // namespace stabmagic

#endif
