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

#ifndef STABMAGIC_DENSE_H
#define STABMAGIC_DENSE_H

// Brute-force statevector / density-matrix simulation for small systems.
// Ground truth for the stabilizer code paths; never used by them.
//
// Qubit q of an n-qubit register is bit q of the basis index (qubit 0 is the
// least significant bit). For multi-target matrices the same convention
// applies locally: targets[k] is bit k of the matrix index.

#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "stabmagic/circuit.h"
#include "stabmagic/pauli_string.h"
#include "stabmagic/tableau.h"

namespace stabmagic {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr size_t kMaxPureQubits = 12;
inline constexpr size_t kMaxDensityQubits = 6;

struct OracleOverflow : std::length_error {
    using std::length_error::length_error;
};

/// Normalized pure state.
class StateVector {
   public:
    /// |0...0>.
    explicit StateVector(size_t num_qubits);
    /// Throws std::invalid_argument unless the length is 2^n and the norm is 1
    /// within 1e-12.
    explicit StateVector(Vector amplitudes);

    size_t num_qubits() const {
        return num_qubits_;
    }
    const Vector &amplitudes() const {
        return amps_;
    }

   private:
    size_t num_qubits_;
    Vector amps_;
};

/// Valid density matrix: Hermitian, unit trace, PSD within tolerance.
class DensityMatrix {
   public:
    /// Throws std::invalid_argument when the invariants do not hold.
    explicit DensityMatrix(Matrix entries);
    static DensityMatrix pure(const StateVector &psi);
    static DensityMatrix maximally_mixed(size_t num_qubits);

    size_t num_qubits() const {
        return num_qubits_;
    }
    const Matrix &matrix() const {
        return m_;
    }

   private:
    size_t num_qubits_;
    Matrix m_;
};

/// Returns a non-empty message when `m` is not a valid density matrix.
std::string density_matrix_problem(const Matrix &m);

Matrix gate_matrix(GateKind kind);
Matrix pauli_matrix(const PauliString &p);
Vector frame_state(FrameLabel label);

/// Kronecker product with per_qubit[k] acting on qubit k.
Matrix kron_qubits(std::span<const Matrix> per_qubit);
Matrix kron(const Matrix &high, const Matrix &low);

/// In-place application of a 2^k x 2^k matrix to the listed targets.
void apply_matrix(Vector &state, const Matrix &u, std::span<const uint32_t> targets);

/// Dense unitary of a measurement-free Clifford circuit.
Matrix circuit_unitary(const Circuit &c);

/// Unitaries substituted for non-Clifford instructions, keyed by name.
using UnitaryTable = std::map<std::string, Matrix>;

/// Unitary table with "T" = diag(1, e^{i pi/4}).
UnitaryTable default_unitaries();

/// Maps classical-bit strings ("c0 c1 ..." left to right) to probability.
using Distribution = std::map<std::string, double>;

struct PureRun {
    StateVector state;
    std::vector<uint8_t> bits;
};

/// One Born-rule trajectory. The input may carry extra trailing qubits beyond
/// the circuit's (untouched by the circuit).
PureRun simulate_pure(const Circuit &c, const StateVector &input, uint64_t seed, const UnitaryTable &unitaries = {});

/// Exact outcome distribution by enumerating every measurement branch.
Distribution distribution(const Circuit &c, const StateVector &input, const UnitaryTable &unitaries = {},
                          size_t max_measurements = 20);

/// Distribution with `ancilla` placed on `placement` (qubit ids in the
/// circuit, ancilla qubit k -> placement[k]) and every other qubit in |0>.
Distribution distribution(const Circuit &c, const DensityMatrix &ancilla, std::span<const uint32_t> placement,
                          const UnitaryTable &unitaries = {}, size_t max_measurements = 20);

struct Branch {
    std::string key;
    /// Unnormalized; squared norm is the branch probability.
    Vector state;
};

/// Final state of every measurement branch. Hidden reset outcomes produce
/// separate entries with equal keys. The input may carry trailing qubits.
std::vector<Branch> branch_states(const Circuit &c, const Vector &input, const UnitaryTable &unitaries = {},
                                  size_t max_measurements = 20);

/// Purification on 2q qubits: system on the low q, purifier on the high q.
Vector purify(const DensityMatrix &rho);

/// Builds the full register: `ancilla` (q system qubits plus optional trailing
/// purifier qubits) on `placement`, data qubits in |0>, purifiers appended
/// after the circuit's qubits.
Vector embed_ancilla(size_t circuit_qubits, const Vector &ancilla, size_t ancilla_system_qubits,
                     std::span<const uint32_t> placement);

/// Reduced density matrix of `keep` (keep[k] becomes local qubit k).
Matrix partial_trace(const Vector &state, std::span<const uint32_t> keep);

struct Channel {
    /// Subsystem dimension d.
    size_t dim = 0;
    /// Normalized Choi matrix (trace 1), index = out + d * ref.
    Matrix choi;
    /// Per-outcome (unnormalized) Choi matrices, keyed like Distribution.
    std::map<std::string, Matrix> branches;
};

/// The map induced on `subsystem` with every other circuit qubit prepared in
/// `environment` (ordered by increasing qubit id, plus any trailing purifier
/// qubits) and traced out afterwards. Requires circuit qubits <= 6.
Channel channel_of_circuit(const Circuit &c, std::span<const uint32_t> subsystem, const Vector &environment,
                           const UnitaryTable &unitaries = {});

/// <Phi_U| J |Phi_U> for a trace-1 Choi matrix; phase-insensitive.
double process_fidelity(const Matrix &choi, const Matrix &unitary);

/// E(rho) = d * Tr_ref[J (I (x) rho^T)].
Matrix apply_choi(const Matrix &choi, const Matrix &rho_in);

/// Max trace distance between two channels' outputs over the product frame
/// states of the input (6^k inputs for k qubits).
double max_output_trace_distance(const Matrix &choi_a, const Matrix &choi_b);

/// |<a|b>|.
double overlap(const Vector &a, const Vector &b);

/// Largest eigenvalue of a Hermitian matrix.
double max_eigenvalue(const Matrix &hermitian);

/// Haar-random pure state.
Vector random_state(size_t num_qubits, std::mt19937_64 &rng);
/// Random full-rank or rank-deficient mixed state (Ginibre construction).
Matrix random_density(size_t num_qubits, std::mt19937_64 &rng, size_t rank = 0);

/// Is U a Clifford: U P U^dagger is a phased Pauli for every X_k, Z_k.
bool is_clifford_unitary(const Matrix &u, double tol = 1e-8);

}  // namespace stabmagic

#endif
