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

#ifndef STABMAGIC_EXPAND_H
#define STABMAGIC_EXPAND_H

#include <string>
#include <vector>

#include "json.hpp"
#include "stabmagic/circuit.h"
#include "stabmagic/dense.h"
#include "stabmagic/gadget_lib.h"

namespace stabmagic {

/// Qubits of the expanded circuit that must start in a gadget's |M>.
struct AncillaRegister {
    std::string gadget;
    std::vector<uint32_t> qubits;
    DensityMatrix state;
    bool reusable;
    /// Number of gadget applications served by this register.
    size_t uses = 0;
};

struct ExpandedCircuit {
    Circuit circuit;
    std::vector<AncillaRegister> ancillas;
    size_t original_qubits = 0;
    size_t original_bits = 0;

    size_t ancilla_qubit_count() const;
    /// All ancilla qubits, register by register.
    std::vector<uint32_t> placement() const;
    /// Tensor product of the register states, first register on the low
    /// bits, matching placement().
    DensityMatrix ancilla_state() const;
};

/// Inlines every gadget body. Reusable gadgets share one ancilla register per
/// name; consumable gadgets get a fresh register per use. Registers are
/// appended after the data qubits in order of first use, and body bits are
/// appended after the circuit's own bits. Throws UnknownGadget.
ExpandedCircuit expand_gadgets(const Circuit &c, const GadgetLibrary &lib);

nlohmann::json ancilla_map_to_json(const ExpandedCircuit &e);

}  // namespace stabmagic

#endif
