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

#ifndef STABMAGIC_CIRCUIT_H
#define STABMAGIC_CIRCUIT_H

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "stabmagic/clifford_gate.h"

namespace stabmagic {

struct GateOp {
    CliffordGate gate;
    bool operator==(const GateOp &) const = default;
};

/// A gate with no Clifford implementation; resolved by name against a gadget
/// library before simulation.
struct NonCliffordOp {
    std::string name;
    std::vector<uint32_t> targets;
    bool operator==(const NonCliffordOp &) const = default;
};

struct MeasureOp {
    uint32_t qubit;
    uint32_t bit;
    bool operator==(const MeasureOp &) const = default;
};

/// Applies `gate` iff classical bit `bit` reads 1.
struct ConditionalOp {
    uint32_t bit;
    CliffordGate gate;
    bool operator==(const ConditionalOp &) const = default;
};

/// Returns the qubit to |0>.
struct ResetOp {
    uint32_t qubit;
    bool operator==(const ResetOp &) const = default;
};

using Instruction = std::variant<GateOp, NonCliffordOp, MeasureOp, ConditionalOp, ResetOp>;

struct Circuit {
    size_t num_qubits = 0;
    size_t num_bits = 0;
    std::vector<Instruction> instructions;

    bool operator==(const Circuit &) const = default;

    size_t count_measurements() const;
    bool has_non_clifford() const;
};

struct ParseError : std::runtime_error {
    ParseError(size_t line, const std::string &message);
    size_t line;
};

/// Parses the line-oriented circuit text format:
///
///     qubits N
///     bits M            (optional; defaults to one past the largest bit used)
///     <GATE> q...       GATE in H S SDG X Y Z SX SXDG CNOT CZ SWAP
///     T q
///     GADGET name q...
///     M q -> cK
///     IF cK <GATE> q...
///     RESET q
///     # comment
///
/// Throws ParseError naming the offending line.
Circuit parse_circuit(std::string_view text);

/// Emits the same grammar; parse_circuit(render_circuit(c)) == c.
std::string render_circuit(const Circuit &c);

struct Diagnostic {
    size_t instruction;
    std::string message;
};

/// Re-checks indices, single assignment of bits, and that every conditional
/// reads a bit written earlier. Empty result means valid.
std::vector<Diagnostic> validate(const Circuit &c);

}  // namespace stabmagic

#endif
