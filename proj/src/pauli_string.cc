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

#include "stabmagic/pauli_string.h"

#include <bit>

namespace stabmagic {

namespace {

size_t words_for(size_t n) {
    return (n + 63) / 64;
}

void require_same_size(const PauliString &a, const PauliString &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw DimensionError(
            "Pauli size mismatch: " + std::to_string(a.num_qubits()) + " vs " + std::to_string(b.num_qubits()));
    }
}

}  // namespace

PauliString::PauliString(size_t num_qubits)
    : num_qubits_(num_qubits), xs_(words_for(num_qubits), 0), zs_(words_for(num_qubits), 0) {
}

PauliString PauliString::from_text(std::string_view text) {
    uint8_t phase = 0;
    if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
        phase = text[0] == '-' ? 2 : 0;
        text.remove_prefix(1);
        if (!text.empty() && text[0] == 'i') {
            phase += 1;
            text.remove_prefix(1);
        }
    }
    PauliString result(text.size());
    for (size_t q = 0; q < text.size(); q++) {
        result.set_letter(q, text[q]);
    }
    result.phase_ = phase & 3;
    return result;
}

PauliString PauliString::single(size_t num_qubits, size_t qubit, char letter) {
    if (qubit >= num_qubits) {
        throw std::out_of_range("qubit " + std::to_string(qubit) + " out of range");
    }
    PauliString result(num_qubits);
    result.set_letter(qubit, letter);
    return result;
}

void PauliString::set_x(size_t q, bool v) {
    uint64_t mask = uint64_t{1} << (q & 63);
    xs_[q >> 6] = v ? (xs_[q >> 6] | mask) : (xs_[q >> 6] & ~mask);
}

void PauliString::set_z(size_t q, bool v) {
    uint64_t mask = uint64_t{1} << (q & 63);
    zs_[q >> 6] = v ? (zs_[q >> 6] | mask) : (zs_[q >> 6] & ~mask);
}

char PauliString::letter(size_t q) const {
    static constexpr char kLetters[4] = {'I', 'X', 'Z', 'Y'};
    return kLetters[x(q) | (z(q) << 1)];
}

void PauliString::set_letter(size_t q, char c) {
    switch (c) {
        case 'I':
        case '_':
            set_x(q, false);
            set_z(q, false);
            break;
        case 'X':
            set_x(q, true);
            set_z(q, false);
            break;
        case 'Y':
            set_x(q, true);
            set_z(q, true);
            break;
        case 'Z':
            set_x(q, false);
            set_z(q, true);
            break;
        default:
            throw std::invalid_argument(std::string("not a Pauli letter: '") + c + "'");
    }
}

bool PauliString::is_identity() const {
    for (size_t k = 0; k < xs_.size(); k++) {
        if (xs_[k] | zs_[k]) {
            return false;
        }
    }
    return true;
}

size_t PauliString::weight() const {
    size_t total = 0;
    for (size_t k = 0; k < xs_.size(); k++) {
        total += std::popcount(xs_[k] | zs_[k]);
    }
    return total;
}

PauliString &PauliString::operator*=(const PauliString &rhs) {
    require_same_size(*this, rhs);
    // Per qubit, anticommuting letter pairs contribute +i for the cyclic
    // orders XY, YZ, ZX and -i for the reverse.
    unsigned plus = 0;
    unsigned minus = 0;
    for (size_t k = 0; k < xs_.size(); k++) {
        uint64_t x1 = xs_[k], z1 = zs_[k];
        uint64_t x2 = rhs.xs_[k], z2 = rhs.zs_[k];
        uint64_t lx = x1 & ~z1, ly = x1 & z1, lz = ~x1 & z1;
        uint64_t rx = x2 & ~z2, ry = x2 & z2, rz = ~x2 & z2;
        plus += std::popcount((lx & ry) | (ly & rz) | (lz & rx));
        minus += std::popcount((ly & rx) | (lz & ry) | (lx & rz));
        xs_[k] = x1 ^ x2;
        zs_[k] = z1 ^ z2;
    }
    phase_ = static_cast<uint8_t>((phase_ + rhs.phase_ + plus + 3 * minus) & 3);
    return *this;
}

bool PauliString::commutes(const PauliString &other) const {
    require_same_size(*this, other);
    unsigned parity = 0;
    for (size_t k = 0; k < xs_.size(); k++) {
        parity ^= std::popcount((xs_[k] & other.zs_[k]) ^ (zs_[k] & other.xs_[k])) & 1;
    }
    return parity == 0;
}

std::string PauliString::str() const {
    static constexpr const char *kPrefix[4] = {"+", "+i", "-", "-i"};
    std::string out = kPrefix[phase_];
    out.reserve(out.size() + num_qubits_);
    for (size_t q = 0; q < num_qubits_; q++) {
        out.push_back(letter(q));
    }
    return out;
}

PauliString operator*(PauliString a, const PauliString &b) {
    a *= b;
    return a;
}

PauliString pauli_mul(const PauliString &a, const PauliString &b) {
    return a * b;
}

bool commutes(const PauliString &a, const PauliString &b) {
    return a.commutes(b);
}

}  // namespace stabmagic
