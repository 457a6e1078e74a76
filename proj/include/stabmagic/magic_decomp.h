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

#ifndef STABMAGIC_MAGIC_DECOMP_H
#define STABMAGIC_MAGIC_DECOMP_H

#include <vector>

#include "json.hpp"
#include "stabmagic/dense.h"
#include "stabmagic/pauli_string.h"
#include "stabmagic/tableau.h"

namespace stabmagic {

inline constexpr size_t kMaxAncillaQubits = 3;

/// Frame weights below this magnitude are dropped.
inline constexpr double kFramePruneThreshold = 1e-13;

/// rho = sum_P c_P P over all 4^q phase-free Pauli strings.
struct PauliDecomposition {
    size_t num_qubits = 0;
    /// Indexed by Pauli code: qubit k's letter is "IXYZ"[(code >> 2k) & 3].
    std::vector<double> coefficients;

    static PauliString pauli_for_code(size_t num_qubits, size_t code);
    double coefficient(const PauliString &p) const;
};

struct FrameTerm {
    double weight;
    /// labels[k] is the state of ancilla qubit k.
    std::vector<FrameLabel> labels;
};

/// rho = sum_k w_k |s_k><s_k| over product states of the six-state frame.
/// Weights are signed and sum to 1.
struct StabFrameDecomposition {
    size_t num_qubits = 0;
    std::vector<FrameTerm> terms;

    double weight_sum() const;
};

/// c_P = Tr(P rho) / 2^q. Throws std::invalid_argument for q > 3.
PauliDecomposition pauli_coefficients(const DensityMatrix &rho);

/// Expands every Pauli factor over its +-1 eigenprojectors (I = |0><0| +
/// |1><1|) and collects like terms. Terms are sorted by label.
StabFrameDecomposition stabilizer_frame(const PauliDecomposition &decomp);

Matrix reconstruct(const PauliDecomposition &decomp);
Matrix reconstruct(const StabFrameDecomposition &decomp);

nlohmann::json to_json(const PauliDecomposition &decomp);
nlohmann::json to_json(const StabFrameDecomposition &decomp);
StabFrameDecomposition frame_from_json(const nlohmann::json &j);

}  // namespace stabmagic

#endif
