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

#include "stabmagic/tableau.h"

#include <array>
#include <sstream>

namespace stabmagic {

namespace {

constexpr std::array<std::string_view, 6> kLabelNames = {"Z+", "Z-", "X+", "X-", "Y+", "Y-"};

}  // namespace

std::string_view frame_label_name(FrameLabel label) {
    return kLabelNames[static_cast<size_t>(label)];
}

std::optional<FrameLabel> frame_label_from_name(std::string_view name) {
    for (size_t k = 0; k < kLabelNames.size(); k++) {
        if (kLabelNames[k] == name) {
            return static_cast<FrameLabel>(k);
        }
    }
    return std::nullopt;
}

Tableau::Tableau(size_t num_qubits) : n_(num_qubits) {
    if (num_qubits == 0) {
        throw std::invalid_argument("tableau needs at least one qubit");
    }
    rows_.reserve(2 * n_);
    for (size_t i = 0; i < n_; i++) {
        rows_.push_back(PauliString::single(n_, i, 'X'));
    }
    for (size_t i = 0; i < n_; i++) {
        rows_.push_back(PauliString::single(n_, i, 'Z'));
    }
}

Tableau::Tableau(std::span<const FrameLabel> labels) : Tableau(labels.size()) {
    for (uint32_t q = 0; q < labels.size(); q++) {
        auto one = [&](GateKind k) { apply(CliffordGate::one(k, q)); };
        switch (labels[q]) {
            case FrameLabel::ZPlus:
                break;
            case FrameLabel::ZMinus:
                one(GateKind::X);
                break;
            case FrameLabel::XPlus:
                one(GateKind::H);
                break;
            case FrameLabel::XMinus:
                one(GateKind::X);
                one(GateKind::H);
                break;
            case FrameLabel::YPlus:
                one(GateKind::H);
                one(GateKind::S);
                break;
            case FrameLabel::YMinus:
                one(GateKind::X);
                one(GateKind::H);
                one(GateKind::S);
                break;
        }
    }
}

void Tableau::apply(const CliffordGate &gate) {
    gate.check(n_);
    for (auto &row : rows_) {
        conjugate_in_place(gate, row);
    }
}

std::optional<size_t> Tableau::random_pivot(size_t q) const {
    for (size_t i = 0; i < n_; i++) {
        if (rows_[n_ + i].x(q)) {
            return n_ + i;
        }
    }
    return std::nullopt;
}

bool Tableau::deterministic_bit(size_t q) const {
    // +-Z_q is the product of the stabilizers whose destabilizer partners
    // anticommute with Z_q.
    PauliString acc(n_);
    for (size_t i = 0; i < n_; i++) {
        if (rows_[i].x(q)) {
            acc *= rows_[n_ + i];
        }
    }
    return acc.negative();
}

double Tableau::probability_of_one(size_t q) const {
    if (q >= n_) {
        throw std::out_of_range("qubit " + std::to_string(q) + " out of range");
    }
    if (random_pivot(q)) {
        return 0.5;
    }
    return deterministic_bit(q) ? 1.0 : 0.0;
}

MeasureOutcome Tableau::collapse(size_t q, bool bit, size_t pivot) {
    for (size_t i = 0; i < 2 * n_; i++) {
        if (i != pivot && i != pivot - n_ && rows_[i].x(q)) {
            rows_[i] *= rows_[pivot];
        }
    }
    rows_[pivot - n_] = rows_[pivot];
    PauliString z = PauliString::single(n_, q, 'Z');
    z.set_phase(bit ? 2 : 0);
    rows_[pivot] = std::move(z);
    return {bit, 0.5};
}

MeasureOutcome Tableau::measure_z(size_t q, std::mt19937_64 &rng) {
    if (q >= n_) {
        throw std::out_of_range("qubit " + std::to_string(q) + " out of range");
    }
    if (auto pivot = random_pivot(q)) {
        return collapse(q, rng() & 1, *pivot);
    }
    return {deterministic_bit(q), 1.0};
}

MeasureOutcome Tableau::measure_z(size_t q, bool forced) {
    if (q >= n_) {
        throw std::out_of_range("qubit " + std::to_string(q) + " out of range");
    }
    if (auto pivot = random_pivot(q)) {
        return collapse(q, forced, *pivot);
    }
    return {forced, deterministic_bit(q) == forced ? 1.0 : 0.0};
}

int Tableau::expectation(const PauliString &p) const {
    if (p.num_qubits() != n_) {
        throw DimensionError("expectation: Pauli has " + std::to_string(p.num_qubits()) + " qubits, tableau has " +
                             std::to_string(n_));
    }
    if (!p.hermitian()) {
        throw std::invalid_argument("expectation needs a Hermitian Pauli string");
    }
    for (size_t i = 0; i < n_; i++) {
        if (!p.commutes(rows_[n_ + i])) {
            return 0;
        }
    }
    PauliString acc(n_);
    for (size_t i = 0; i < n_; i++) {
        if (!p.commutes(rows_[i])) {
            acc *= rows_[n_ + i];
        }
    }
    return acc.phase() == p.phase() ? 1 : -1;
}

std::string Tableau::validate() const {
    for (size_t i = 0; i < n_; i++) {
        if (!stabilizer(i).hermitian()) {
            return "stabilizer " + std::to_string(i) + " has imaginary phase";
        }
    }
    for (size_t a = 0; a < 2 * n_; a++) {
        for (size_t b = a + 1; b < 2 * n_; b++) {
            bool should_anticommute = a < n_ && b == a + n_;
            if (rows_[a].commutes(rows_[b]) == should_anticommute) {
                std::ostringstream msg;
                msg << "rows " << a << " and " << b << (should_anticommute ? " commute" : " anticommute");
                return msg.str();
            }
        }
    }
    return {};
}

std::string Tableau::dump() const {
    std::string out;
    for (const auto &row : rows_) {
        out += row.str();
        out += '\n';
    }
    return out;
}

Tableau new_tableau(std::span<const FrameLabel> labels) {
    if (labels.empty()) {
        throw std::invalid_argument("new_tableau needs at least one label");
    }
    return Tableau(labels);
}

int expectation_pauli(const Tableau &t, const PauliString &p) {
    return t.expectation(p);
}

}  // namespace stabmagic
