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

#include "stabmagic/clifford_gate.h"

#include <string>

namespace stabmagic {

size_t gate_arity(GateKind kind) {
    switch (kind) {
        case GateKind::CNOT:
        case GateKind::CZ:
        case GateKind::SWAP:
            return 2;
        default:
            return 1;
    }
}

std::string_view gate_mnemonic(GateKind kind) {
    switch (kind) {
        case GateKind::H:
            return "H";
        case GateKind::S:
            return "S";
        case GateKind::S_DAG:
            return "SDG";
        case GateKind::X:
            return "X";
        case GateKind::Y:
            return "Y";
        case GateKind::Z:
            return "Z";
        case GateKind::CNOT:
            return "CNOT";
        case GateKind::CZ:
            return "CZ";
        case GateKind::SWAP:
            return "SWAP";
        case GateKind::SQRT_X:
            return "SX";
        case GateKind::SQRT_X_DAG:
            return "SXDG";
    }
    return "?";
}

std::optional<GateKind> gate_from_mnemonic(std::string_view name) {
    for (GateKind k : kAllGateKinds) {
        if (gate_mnemonic(k) == name) {
            return k;
        }
    }
    return std::nullopt;
}

GateKind inverse_kind(GateKind kind) {
    switch (kind) {
        case GateKind::S:
            return GateKind::S_DAG;
        case GateKind::S_DAG:
            return GateKind::S;
        case GateKind::SQRT_X:
            return GateKind::SQRT_X_DAG;
        case GateKind::SQRT_X_DAG:
            return GateKind::SQRT_X;
        default:
            return kind;
    }
}

CliffordGate CliffordGate::one(GateKind kind, uint32_t q) {
    if (gate_arity(kind) != 1) {
        throw std::invalid_argument(std::string(gate_mnemonic(kind)) + " takes 2 targets");
    }
    return CliffordGate{kind, {q, 0}};
}

CliffordGate CliffordGate::two(GateKind kind, uint32_t a, uint32_t b) {
    if (gate_arity(kind) != 2) {
        throw std::invalid_argument(std::string(gate_mnemonic(kind)) + " takes 1 target");
    }
    if (a == b) {
        throw std::invalid_argument(std::string(gate_mnemonic(kind)) + " targets must be distinct");
    }
    return CliffordGate{kind, {a, b}};
}

CliffordGate CliffordGate::inverse() const {
    return CliffordGate{inverse_kind(kind), targets};
}

void CliffordGate::check(size_t num_qubits) const {
    for (size_t k = 0; k < arity(); k++) {
        if (targets[k] >= num_qubits) {
            throw std::out_of_range(
                "qubit " + std::to_string(targets[k]) + " out of range for " + std::to_string(num_qubits) +
                " qubits");
        }
    }
    if (arity() == 2 && targets[0] == targets[1]) {
        throw std::invalid_argument(std::string(gate_mnemonic(kind)) + " targets must be distinct");
    }
}

bool CliffordGate::operator==(const CliffordGate &other) const {
    if (kind != other.kind || targets[0] != other.targets[0]) {
        return false;
    }
    return arity() == 1 || targets[1] == other.targets[1];
}

void conjugate_in_place(const CliffordGate &gate, PauliString &p) {
    uint32_t a = gate.targets[0];
    bool x = p.x(a);
    bool z = p.z(a);
    uint8_t flip = 0;
    switch (gate.kind) {
        case GateKind::H:
            flip = x & z;
            p.set_x(a, z);
            p.set_z(a, x);
            break;
        case GateKind::S:
            flip = x & z;
            p.set_z(a, z ^ x);
            break;
        case GateKind::S_DAG:
            flip = x & !z;
            p.set_z(a, z ^ x);
            break;
        case GateKind::X:
            flip = z;
            break;
        case GateKind::Y:
            flip = x ^ z;
            break;
        case GateKind::Z:
            flip = x;
            break;
        case GateKind::SQRT_X:
            flip = z & !x;
            p.set_x(a, x ^ z);
            break;
        case GateKind::SQRT_X_DAG:
            flip = x & z;
            p.set_x(a, x ^ z);
            break;
        case GateKind::CNOT: {
            uint32_t t = gate.targets[1];
            bool xt = p.x(t);
            bool zt = p.z(t);
            flip = x & zt & !(xt ^ z);
            p.set_x(t, xt ^ x);
            p.set_z(a, z ^ zt);
            break;
        }
        case GateKind::CZ: {
            uint32_t b = gate.targets[1];
            bool xb = p.x(b);
            bool zb = p.z(b);
            flip = x & xb & (z ^ zb);
            p.set_z(a, z ^ xb);
            p.set_z(b, zb ^ x);
            break;
        }
        case GateKind::SWAP: {
            uint32_t b = gate.targets[1];
            bool xb = p.x(b);
            bool zb = p.z(b);
            p.set_x(a, xb);
            p.set_z(a, zb);
            p.set_x(b, x);
            p.set_z(b, z);
            break;
        }
    }
    if (flip) {
        p.set_phase(p.phase() + 2);
    }
}

PauliString conjugate_by_gate(const CliffordGate &gate, const PauliString &p) {
    gate.check(p.num_qubits());
    PauliString result = p;
    conjugate_in_place(gate, result);
    return result;
}

}  // namespace stabmagic
