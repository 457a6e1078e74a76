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

#ifndef STABMAGIC_PAULI_STRING_H
#define STABMAGIC_PAULI_STRING_H

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace stabmagic {

/// Raised when two operands disagree on qubit count.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A phased Pauli string i^k * P_0 (x) P_1 (x) ... (x) P_{n-1}.
///
/// Each qubit carries an (x, z) bit pair; (1, 1) denotes the Hermitian Y
/// (Y = i*X*Z), so the identity, X, Y, Z letters map directly onto bits and
/// the phase exponent alone decides Hermiticity (k even).
///
/// Bits are packed 64 per word. Words past num_qubits are kept zero.
class PauliString {
   public:
    explicit PauliString(size_t num_qubits);

    /// Parses "+iXZIY"-style text: optional phase prefix in {+, +i, -, -i},
    /// then one of I/X/Y/Z (or '_' for I) per qubit.
    static PauliString from_text(std::string_view text);

    /// Single-qubit letter embedded at `qubit` in an n-qubit identity.
    static PauliString single(size_t num_qubits, size_t qubit, char letter);

    size_t num_qubits() const {
        return num_qubits_;
    }
    uint8_t phase() const {
        return phase_;
    }
    void set_phase(uint8_t k) {
        phase_ = k & 3;
    }
    bool hermitian() const {
        return (phase_ & 1) == 0;
    }
    /// True for phase exponent 2 (sign -1).
    bool negative() const {
        return phase_ == 2;
    }

    bool x(size_t q) const {
        return (xs_[q >> 6] >> (q & 63)) & 1;
    }
    bool z(size_t q) const {
        return (zs_[q >> 6] >> (q & 63)) & 1;
    }
    void set_x(size_t q, bool v);
    void set_z(size_t q, bool v);

    char letter(size_t q) const;
    void set_letter(size_t q, char c);

    bool is_identity() const;
    /// Number of non-identity letters.
    size_t weight() const;

    /// Right multiplication: *this = (*this) * rhs, phase tracked exactly.
    PauliString &operator*=(const PauliString &rhs);

    bool commutes(const PauliString &other) const;

    std::string str() const;

    bool operator==(const PauliString &other) const = default;

    const std::vector<uint64_t> &x_words() const {
        return xs_;
    }
    const std::vector<uint64_t> &z_words() const {
        return zs_;
    }

   private:
    size_t num_qubits_;
    std::vector<uint64_t> xs_;
    std::vector<uint64_t> zs_;
    uint8_t phase_ = 0;
};

PauliString operator*(PauliString a, const PauliString &b);

/// Group product a*b. Throws DimensionError on size mismatch.
PauliString pauli_mul(const PauliString &a, const PauliString &b);

/// Symplectic test; ignores phases. Throws DimensionError on size mismatch.
bool commutes(const PauliString &a, const PauliString &b);

}  // namespace stabmagic

#endif
