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

#ifndef STABMAGIC_GADGET_LIB_H
#define STABMAGIC_GADGET_LIB_H

// Magic-state gadgets: a Clifford body acting on an ancilla register prepared
// in |M> plus data qubits, together with the unitary it claims to implement.
// Body qubits 0..q-1 are the ancilla, q.. the data.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "stabmagic/circuit.h"
#include "stabmagic/dense.h"

namespace stabmagic {

struct GadgetError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct UnknownGadget : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

class GadgetDef {
   public:
    /// Validates: body Clifford-only, body wider than the ancilla, claimed
    /// unitary square of size 2^(data qubits), and no measurement or reset of
    /// the ancilla when reusable.
    GadgetDef(std::string name, DensityMatrix ancilla, Circuit body, Matrix claimed_unitary, bool reusable);
    GadgetDef(std::string name, const StateVector &ancilla, Circuit body, Matrix claimed_unitary, bool reusable);

    const std::string &name() const {
        return name_;
    }
    size_t ancilla_qubits() const {
        return ancilla_.num_qubits();
    }
    size_t data_qubits() const {
        return body_.num_qubits - ancilla_.num_qubits();
    }
    const DensityMatrix &ancilla_state() const {
        return ancilla_;
    }
    /// Set when the ancilla was given as a state vector.
    const std::optional<Vector> &ancilla_pure() const {
        return pure_;
    }
    const Circuit &body() const {
        return body_;
    }
    const Matrix &claimed_unitary() const {
        return claimed_;
    }
    bool reusable() const {
        return reusable_;
    }

    /// Pure ancilla vector, or its purification (purifier qubits trailing).
    Vector ancilla_environment() const;

   private:
    void check() const;

    std::string name_;
    DensityMatrix ancilla_;
    std::optional<Vector> pure_;
    Circuit body_;
    Matrix claimed_;
    bool reusable_;
};

/// T_inject, S_reusable, SqrtX_reusable or SqrtY_reusable.
GadgetDef builtin_gadget(std::string_view name);

class GadgetLibrary {
   public:
    /// Empty library.
    GadgetLibrary() = default;
    /// The four built-in gadgets plus the alias "T" for T_inject.
    static GadgetLibrary builtins();

    /// Adds or replaces a gadget.
    void add(GadgetDef g);
    void add_alias(std::string alias, std::string target);

    const GadgetDef *find(std::string_view name) const;
    /// Throws UnknownGadget.
    const GadgetDef &get(std::string_view name) const;
    /// Gadget names, then aliases.
    std::vector<std::string> names() const;
    /// Claimed unitaries by name and alias, for the dense oracle.
    UnitaryTable unitaries() const;

   private:
    std::map<std::string, GadgetDef, std::less<>> gadgets_;
    std::map<std::string, std::string, std::less<>> aliases_;
};

struct VerifyOptions {
    double tolerance = 1e-10;
    size_t random_inputs = 100;
    uint64_t seed = 1;
};

struct VerifyReport {
    std::string name;
    bool reusable = false;
    /// Process fidelity of the branch-summed data channel with the claim.
    double process_fidelity = 0;
    /// Worst output fidelity <U psi| rho_out |U psi> over the input design.
    double min_state_fidelity = 0;
    /// min(process_fidelity, min_state_fidelity).
    double unitary_match = 0;
    /// Per-outcome process fidelity of the normalized branch channel.
    std::map<std::string, double> branch_fidelity;
    /// Worst Uhlmann fidelity of the ancilla after the body with |M>;
    /// reusable gadgets only.
    std::optional<double> ancilla_restored;
    /// Max over inputs of 1 - lambda_max(rho_data_out).
    double leakage = 0;
    /// The body uses the gate it claims to implement (or its inverse).
    bool uses_target_gate = false;
    size_t inputs_checked = 0;
    bool passed = false;
    std::vector<std::string> failures;
};

/// Checks the gadget on the product frame states of the data register and
/// `random_inputs` Haar-random inputs, plus the full process fidelity.
/// Requires ancilla + data <= 6 qubits.
VerifyReport verify_gadget(const GadgetDef &g, const VerifyOptions &options = {});

/// Uhlmann fidelity (tr sqrt(sqrt(a) b sqrt(a)))^2.
double state_fidelity(const Matrix &a, const Matrix &b);

nlohmann::json gadget_to_json(const GadgetDef &g);
GadgetDef gadget_from_json(const nlohmann::json &j);
nlohmann::json report_to_json(const VerifyReport &r);

}  // namespace stabmagic

#endif
