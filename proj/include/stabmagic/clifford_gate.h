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

#ifndef STABMAGIC_CLIFFORD_GATE_H
#define STABMAGIC_CLIFFORD_GATE_H

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "stabmagic/pauli_string.h"

namespace stabmagic {

enum class GateKind : uint8_t {
    H,
    S,
    S_DAG,
    X,
    Y,
    Z,
    CNOT,
    CZ,
    SWAP,
    SQRT_X,
    SQRT_X_DAG,
};

inline constexpr std::array<GateKind, 11> kAllGateKinds = {
    GateKind::H,    GateKind::S,  GateKind::S_DAG, GateKind::X,      GateKind::Y,          GateKind::Z,
    GateKind::CNOT, GateKind::CZ, GateKind::SWAP,  GateKind::SQRT_X, GateKind::SQRT_X_DAG,
};

size_t gate_arity(GateKind kind);

/// Circuit-text mnemonic (H, S, SDG, X, Y, Z, SX, SXDG, CNOT, CZ, SWAP).
std::string_view gate_mnemonic(GateKind kind);
std::optional<GateKind> gate_from_mnemonic(std::string_view name);

GateKind inverse_kind(GateKind kind);

/// A Clifford gate with its targets. For CNOT, targets[0] is the control.
struct CliffordGate {
    GateKind kind;
    std::array<uint32_t, 2> targets{};

    static CliffordGate one(GateKind kind, uint32_t q);
    static CliffordGate two(GateKind kind, uint32_t a, uint32_t b);

    size_t arity() const {
        return gate_arity(kind);
    }
    CliffordGate inverse() const;

    /// Checks arity-dependent target distinctness and the qubit bound.
    /// Throws std::out_of_range / std::invalid_argument.
    void check(size_t num_qubits) const;

    bool operator==(const CliffordGate &other) const;
};

/// p <- g p g^dagger, no range checks.
void conjugate_in_place(const CliffordGate &gate, PauliString &p);

/// Returns g p g^dagger. Throws std::out_of_range if a target exceeds p's size.
PauliString conjugate_by_gate(const CliffordGate &gate, const PauliString &p);

}  // namespace stabmagic

#endif
