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

#include <map>

#include "overloaded.h"

namespace stabmagic {

size_t ExpandedCircuit::ancilla_qubit_count() const {
    size_t total = 0;
    for (const auto &a : ancillas) {
        total += a.qubits.size();
    }
    return total;
}

std::vector<uint32_t> ExpandedCircuit::placement() const {
    std::vector<uint32_t> out;
    for (const auto &a : ancillas) {
        out.insert(out.end(), a.qubits.begin(), a.qubits.end());
    }
    return out;
}

DensityMatrix ExpandedCircuit::ancilla_state() const {
    Matrix rho = Matrix::Ones(1, 1);
    for (const auto &a : ancillas) {
        rho = kron(a.state.matrix(), rho);
    }
    return DensityMatrix(std::move(rho));
}

ExpandedCircuit expand_gadgets(const Circuit &c, const GadgetLibrary &lib) {
    ExpandedCircuit out;
    out.original_qubits = c.num_qubits;
    out.original_bits = c.num_bits;
    out.circuit.num_qubits = c.num_qubits;
    out.circuit.num_bits = c.num_bits;

    std::map<std::string, size_t> reusable_register;
    auto allocate = [&](const GadgetDef &g) -> size_t {
        AncillaRegister reg{g.name(), {}, g.ancilla_state(), g.reusable()};
        for (size_t k = 0; k < g.ancilla_qubits(); k++) {
            reg.qubits.push_back(static_cast<uint32_t>(out.circuit.num_qubits++));
        }
        out.ancillas.push_back(std::move(reg));
        return out.ancillas.size() - 1;
    };

    for (const auto &inst : c.instructions) {
        const auto *op = std::get_if<NonCliffordOp>(&inst);
        if (!op) {
            out.circuit.instructions.push_back(inst);
            continue;
        }
        const GadgetDef &g = lib.get(op->name);
        if (op->targets.size() != g.data_qubits()) {
            throw DimensionError("gadget '" + op->name + "' acts on " + std::to_string(g.data_qubits()) +
                                 " qubits, got " + std::to_string(op->targets.size()));
        }
        size_t reg_index;
        if (g.reusable()) {
            auto [it, fresh] = reusable_register.try_emplace(g.name(), 0);
            if (fresh) {
                it->second = allocate(g);
            }
            reg_index = it->second;
        } else {
            reg_index = allocate(g);
        }
        AncillaRegister &reg = out.ancillas[reg_index];
        reg.uses++;

        const size_t q = g.ancilla_qubits();
        auto qubit = [&](uint32_t body_qubit) {
            return body_qubit < q ? reg.qubits[body_qubit] : op->targets[body_qubit - q];
        };
        auto remap_gate = [&](CliffordGate gate) {
            for (size_t t = 0; t < gate.arity(); t++) {
                gate.targets[t] = qubit(gate.targets[t]);
            }
            return gate;
        };
        const auto bit_base = static_cast<uint32_t>(out.circuit.num_bits);
        out.circuit.num_bits += g.body().num_bits;
        for (const auto &body_inst : g.body().instructions) {
            out.circuit.instructions.push_back(std::visit(
                overloaded{
                    [&](const GateOp &b) -> Instruction { return GateOp{remap_gate(b.gate)}; },
                    [&](const MeasureOp &b) -> Instruction { return MeasureOp{qubit(b.qubit), bit_base + b.bit}; },
                    [&](const ConditionalOp &b) -> Instruction {
                        return ConditionalOp{bit_base + b.bit, remap_gate(b.gate)};
                    },
                    [&](const ResetOp &b) -> Instruction { return ResetOp{qubit(b.qubit)}; },
                    [&](const NonCliffordOp &) -> Instruction {
                        throw GadgetError("gadget body contains a non-Clifford instruction");
                    },
                },
                body_inst));
        }
    }
    return out;
}

nlohmann::json ancilla_map_to_json(const ExpandedCircuit &e) {
    nlohmann::json regs = nlohmann::json::array();
    for (const auto &a : e.ancillas) {
        regs.push_back({{"gadget", a.gadget}, {"qubits", a.qubits}, {"reusable", a.reusable}, {"uses", a.uses}});
    }
    return regs;
}

}  // namespace stabmagic
