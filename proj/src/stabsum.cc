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

#include "stabmagic/stabsum.h"

#include <algorithm>
#include <random>
#include <sstream>

#include "overloaded.h"

namespace stabmagic {

namespace {

// Branches below this probability are numerically indistinguishable from the
// cancellations of signed weights.
constexpr double kDeadBranch = 1e-13;

double checked(double p) {
    if (p < -kMixtureProbabilityTolerance || p > 1 + kMixtureProbabilityTolerance) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "mixture probability " << p << " outside [0, 1]";
        throw InvalidMixtureState(msg.str());
    }
    return std::clamp(p, 0.0, 1.0);
}

void require_expanded(const Circuit &c) {
    if (c.has_non_clifford()) {
        throw NotExpandedError("circuit contains non-Clifford instructions; run expand_gadgets first");
    }
}

std::string bit_key(const OutcomeRecord &bits) {
    std::string key(bits.size(), '0');
    for (size_t k = 0; k < bits.size(); k++) {
        key[k] = bits[k] ? '1' : '0';
    }
    return key;
}

void walk(const Circuit &c, size_t pc, StabMixture m, double prob, OutcomeRecord &bits, Distribution &out) {
    for (; pc < c.instructions.size(); pc++) {
        const Instruction &inst = c.instructions[pc];
        if (const auto *g = std::get_if<GateOp>(&inst)) {
            m.apply(g->gate);
        } else if (const auto *cond = std::get_if<ConditionalOp>(&inst)) {
            if (bits[cond->bit]) {
                m.apply(cond->gate);
            }
        } else {
            bool is_measure = std::holds_alternative<MeasureOp>(inst);
            uint32_t qubit = is_measure ? std::get<MeasureOp>(inst).qubit : std::get<ResetOp>(inst).qubit;
            m.probability_of_one(qubit);  // range check on the full mixture
            for (bool b : {false, true}) {
                StabMixture branch = m;
                double p = branch.condition(qubit, b);
                if (p <= kDeadBranch) {
                    continue;
                }
                if (is_measure) {
                    bits[std::get<MeasureOp>(inst).bit] = b;
                } else if (b) {
                    branch.apply(CliffordGate::one(GateKind::X, qubit));
                }
                walk(c, pc + 1, std::move(branch), prob * p, bits, out);
            }
            if (is_measure) {
                bits[std::get<MeasureOp>(inst).bit] = 0;
            }
            return;
        }
    }
    out[bit_key(bits)] += prob;
}

}  // namespace

StabMixture StabMixture::from_frame(const Circuit &c, const StabFrameDecomposition &frame,
                                    std::span<const uint32_t> placement) {
    require_expanded(c);
    if (placement.size() != frame.num_qubits) {
        throw DimensionError("ancilla placement has " + std::to_string(placement.size()) + " qubits, state has " +
                             std::to_string(frame.num_qubits));
    }
    std::vector<bool> used(c.num_qubits, false);
    for (uint32_t q : placement) {
        if (q >= c.num_qubits || used[q]) {
            throw std::invalid_argument("ancilla placement qubit " + std::to_string(q) + " invalid or repeated");
        }
        used[q] = true;
    }
    StabMixture m;
    m.num_ancilla_ = frame.num_qubits;
    m.num_data_ = c.num_qubits - frame.num_qubits;
    std::vector<FrameLabel> labels(c.num_qubits, FrameLabel::ZPlus);
    for (const auto &term : frame.terms) {
        for (size_t k = 0; k < placement.size(); k++) {
            labels[placement[k]] = term.labels[k];
        }
        m.terms_.push_back({term.weight, Tableau(labels)});
    }
    m.initial_terms_ = m.terms_.size();
    return m;
}

StabMixture StabMixture::init(const Circuit &c, const DensityMatrix &ancilla_rho, std::span<const uint32_t> placement) {
    require_expanded(c);
    if (ancilla_rho.num_qubits() > kMaxAncillaQubits) {
        throw std::invalid_argument("ancilla limited to " + std::to_string(kMaxAncillaQubits) + " qubits");
    }
    return from_frame(c, stabilizer_frame(pauli_coefficients(ancilla_rho)), placement);
}

double StabMixture::weight_sum() const {
    double total = 0;
    for (const auto &t : terms_) {
        total += t.weight;
    }
    return total;
}

void StabMixture::apply(const CliffordGate &gate) {
    for (auto &t : terms_) {
        t.tableau.apply(gate);
    }
}

void StabMixture::apply(std::span<const CliffordGate> gates) {
    for (auto &t : terms_) {
        for (const auto &g : gates) {
            t.tableau.apply(g);
        }
    }
}

double StabMixture::probability_of_one(uint32_t qubit) const {
    double p = 0;
    for (const auto &t : terms_) {
        p += t.weight * t.tableau.probability_of_one(qubit);
    }
    return checked(p);
}

double StabMixture::condition(uint32_t qubit, bool bit) {
    double p1 = probability_of_one(qubit);
    double p = bit ? p1 : 1 - p1;
    if (p <= 0) {
        return 0;
    }
    std::vector<MixtureTerm> kept;
    kept.reserve(terms_.size());
    for (auto &t : terms_) {
        MeasureOutcome r = t.tableau.measure_z(qubit, bit);
        if (r.probability > 0) {
            kept.push_back({t.weight * r.probability / p, std::move(t.tableau)});
        }
    }
    terms_ = std::move(kept);
    return p;
}

OutcomeRecord run_sample(StabMixture m, const Circuit &c, uint64_t seed) {
    require_expanded(c);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    OutcomeRecord bits(c.num_bits, 0);
    // Runs of unconditional gates are applied term by term to keep each
    // tableau in cache.
    std::vector<CliffordGate> pending;
    auto flush = [&] {
        m.apply(pending);
        pending.clear();
    };
    auto sample = [&](uint32_t qubit) {
        flush();
        bool b = unit(rng) < m.probability_of_one(qubit);
        m.condition(qubit, b);
        return b;
    };
    for (const auto &inst : c.instructions) {
        std::visit(overloaded{
                       [&](const GateOp &op) { pending.push_back(op.gate); },
                       [&](const ConditionalOp &op) {
                           if (bits[op.bit]) {
                               pending.push_back(op.gate);
                           }
                       },
                       [&](const MeasureOp &op) { bits[op.bit] = sample(op.qubit); },
                       [&](const ResetOp &op) {
                           if (sample(op.qubit)) {
                               m.apply(CliffordGate::one(GateKind::X, op.qubit));
                           }
                       },
                       [](const NonCliffordOp &) {},
                   },
                   inst);
    }
    flush();
    return bits;
}

Distribution exact_distribution(const StabMixture &m, const Circuit &c, size_t max_measurements) {
    require_expanded(c);
    if (c.count_measurements() > max_measurements) {
        throw std::length_error("exact_distribution limited to " + std::to_string(max_measurements) +
                                " measurements, circuit has " + std::to_string(c.count_measurements()));
    }
    Distribution out;
    OutcomeRecord bits(c.num_bits, 0);
    walk(c, 0, m, 1.0, bits, out);
    return out;
}

nlohmann::json record_to_json(const OutcomeRecord &record) {
    nlohmann::json j = nlohmann::json::object();
    for (size_t k = 0; k < record.size(); k++) {
        j["c" + std::to_string(k)] = record[k];
    }
    return j;
}

nlohmann::json distribution_to_json(const Distribution &d) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto &[key, p] : d) {
        j[key] = p;
    }
    return j;
}

}  // namespace stabmagic
