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

#include "stabmagic/dense.h"

#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>

#include "overloaded.h"

namespace stabmagic {

namespace {

constexpr size_t kMaxInternalQubits = 16;
constexpr double kDeadBranch = 1e-26;

size_t qubits_for_dim(size_t dim, const char *what) {
    if (dim == 0 || !std::has_single_bit(dim)) {
        throw std::invalid_argument(std::string(what) + ": dimension " + std::to_string(dim) + " is not a power of 2");
    }
    return static_cast<size_t>(std::countr_zero(dim));
}

/// Zeroes the amplitudes where `qubit` != bit and returns the kept norm^2.
double project(Vector &state, uint32_t qubit, bool bit) {
    size_t mask = size_t{1} << qubit;
    double kept = 0;
    for (Eigen::Index i = 0; i < state.size(); i++) {
        if (((static_cast<size_t>(i) & mask) != 0) != bit) {
            state[i] = 0;
        } else {
            kept += std::norm(state[i]);
        }
    }
    return kept;
}

const Matrix &unitary_for(const NonCliffordOp &op, const UnitaryTable &unitaries) {
    auto it = unitaries.find(op.name);
    if (it == unitaries.end()) {
        throw std::invalid_argument("no unitary supplied for non-Clifford '" + op.name + "'");
    }
    size_t expect = size_t{1} << op.targets.size();
    if (static_cast<size_t>(it->second.rows()) != expect) {
        throw std::invalid_argument("unitary for '" + op.name + "' has wrong size");
    }
    return it->second;
}

void apply_gate(Vector &state, const CliffordGate &g) {
    std::array<uint32_t, 2> t = g.targets;
    apply_matrix(state, gate_matrix(g.kind), std::span<const uint32_t>(t.data(), g.arity()));
}

std::string bit_key(const std::vector<uint8_t> &bits) {
    std::string key(bits.size(), '0');
    for (size_t k = 0; k < bits.size(); k++) {
        key[k] = bits[k] ? '1' : '0';
    }
    return key;
}

/// Depth-first walk over every measurement branch; `leaf` receives the
/// unnormalized final state (norm^2 = branch probability).
template <class Leaf>
void walk(const Circuit &c, size_t pc, Vector state, std::vector<uint8_t> &bits, const UnitaryTable &unitaries,
          Leaf &leaf) {
    for (; pc < c.instructions.size(); pc++) {
        const Instruction &inst = c.instructions[pc];
        if (const auto *m = std::get_if<MeasureOp>(&inst)) {
            for (bool b : {false, true}) {
                Vector branch = state;
                if (project(branch, m->qubit, b) > kDeadBranch) {
                    bits[m->bit] = b;
                    walk(c, pc + 1, std::move(branch), bits, unitaries, leaf);
                }
            }
            bits[m->bit] = 0;
            return;
        }
        if (const auto *r = std::get_if<ResetOp>(&inst)) {
            for (bool b : {false, true}) {
                Vector branch = state;
                if (project(branch, r->qubit, b) > kDeadBranch) {
                    if (b) {
                        apply_gate(branch, CliffordGate::one(GateKind::X, r->qubit));
                    }
                    walk(c, pc + 1, std::move(branch), bits, unitaries, leaf);
                }
            }
            return;
        }
        std::visit(overloaded{
                       [&](const GateOp &op) { apply_gate(state, op.gate); },
                       [&](const NonCliffordOp &op) { apply_matrix(state, unitary_for(op, unitaries), op.targets); },
                       [&](const ConditionalOp &op) {
                           if (bits[op.bit]) {
                               apply_gate(state, op.gate);
                           }
                       },
                       [](const MeasureOp &) {},
                       [](const ResetOp &) {},
                   },
                   inst);
    }
    leaf(bits, state);
}

void check_state_fits(const Circuit &c, const Vector &state, size_t cap) {
    size_t n = qubits_for_dim(static_cast<size_t>(state.size()), "state");
    if (n > cap) {
        throw OracleOverflow("oracle limited to " + std::to_string(cap) + " qubits, got " + std::to_string(n));
    }
    if (n < c.num_qubits) {
        throw DimensionError("state has " + std::to_string(n) + " qubits, circuit needs " +
                             std::to_string(c.num_qubits));
    }
}

}  // namespace

StateVector::StateVector(size_t num_qubits) : num_qubits_(num_qubits), amps_(Vector::Zero(size_t{1} << num_qubits)) {
    if (num_qubits > kMaxInternalQubits) {
        throw OracleOverflow("state vector too large");
    }
    amps_[0] = 1;
}

StateVector::StateVector(Vector amplitudes)
    : num_qubits_(qubits_for_dim(static_cast<size_t>(amplitudes.size()), "state vector")), amps_(std::move(amplitudes)) {
    if (std::abs(amps_.norm() - 1) > 1e-12) {
        throw std::invalid_argument("state vector is not normalized");
    }
}

std::string density_matrix_problem(const Matrix &m) {
    if (m.rows() != m.cols() || m.rows() == 0 || !std::has_single_bit(static_cast<size_t>(m.rows()))) {
        return "density matrix must be square with power-of-two dimension";
    }
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
        return "density matrix is not Hermitian";
    }
    if (std::abs(m.trace() - Complex(1, 0)) > 1e-12) {
        std::ostringstream msg;
        msg << "density matrix trace is " << m.trace().real() << ", expected 1";
        return msg.str();
    }
    Eigen::SelfAdjointEigenSolver<Matrix> eig(m, Eigen::EigenvaluesOnly);
    if (eig.eigenvalues().minCoeff() < -1e-10) {
        return "density matrix has a negative eigenvalue";
    }
    return {};
}

DensityMatrix::DensityMatrix(Matrix entries) : num_qubits_(0), m_(std::move(entries)) {
    if (auto problem = density_matrix_problem(m_); !problem.empty()) {
        throw std::invalid_argument(problem);
    }
    num_qubits_ = qubits_for_dim(static_cast<size_t>(m_.rows()), "density matrix");
    if (num_qubits_ > kMaxDensityQubits) {
        throw OracleOverflow("density matrices limited to " + std::to_string(kMaxDensityQubits) + " qubits");
    }
}

DensityMatrix DensityMatrix::pure(const StateVector &psi) {
    const Vector &a = psi.amplitudes();
    return DensityMatrix(a * a.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(size_t num_qubits) {
    size_t d = size_t{1} << num_qubits;
    return DensityMatrix(Matrix::Identity(d, d) / static_cast<double>(d));
}

Matrix gate_matrix(GateKind kind) {
    const Complex i(0, 1);
    const double r = 1 / std::numbers::sqrt2;
    Matrix h(2, 2);
    h << r, r, r, -r;
    Matrix s(2, 2);
    s << 1, 0, 0, i;
    Matrix m;
    switch (kind) {
        case GateKind::H:
            return h;
        case GateKind::S:
            return s;
        case GateKind::S_DAG:
            return s.adjoint();
        case GateKind::X:
            m.resize(2, 2);
            m << 0, 1, 1, 0;
            return m;
        case GateKind::Y:
            m.resize(2, 2);
            m << 0, -i, i, 0;
            return m;
        case GateKind::Z:
            m.resize(2, 2);
            m << 1, 0, 0, -1;
            return m;
        case GateKind::SQRT_X:
            return h * s * h;
        case GateKind::SQRT_X_DAG:
            return (h * s * h).adjoint();
        case GateKind::CNOT:
            m = Matrix::Zero(4, 4);
            m(0, 0) = m(2, 2) = m(3, 1) = m(1, 3) = 1;
            return m;
        case GateKind::CZ:
            m = Matrix::Identity(4, 4);
            m(3, 3) = -1;
            return m;
        case GateKind::SWAP:
            m = Matrix::Zero(4, 4);
            m(0, 0) = m(3, 3) = m(1, 2) = m(2, 1) = 1;
            return m;
    }
    throw std::logic_error("unhandled gate kind");
}

Matrix pauli_matrix(const PauliString &p) {
    std::vector<Matrix> factors;
    factors.reserve(p.num_qubits());
    for (size_t q = 0; q < p.num_qubits(); q++) {
        switch (p.letter(q)) {
            case 'X':
                factors.push_back(gate_matrix(GateKind::X));
                break;
            case 'Y':
                factors.push_back(gate_matrix(GateKind::Y));
                break;
            case 'Z':
                factors.push_back(gate_matrix(GateKind::Z));
                break;
            default:
                factors.push_back(Matrix::Identity(2, 2));
        }
    }
    static const Complex kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return kron_qubits(factors) * kPhases[p.phase()];
}

Vector frame_state(FrameLabel label) {
    const double r = 1 / std::numbers::sqrt2;
    const Complex i(0, 1);
    Vector v(2);
    switch (label) {
        case FrameLabel::ZPlus:
            v << 1, 0;
            break;
        case FrameLabel::ZMinus:
            v << 0, 1;
            break;
        case FrameLabel::XPlus:
            v << r, r;
            break;
        case FrameLabel::XMinus:
            v << r, -r;
            break;
        case FrameLabel::YPlus:
            v << r, r * i;
            break;
        case FrameLabel::YMinus:
            v << r, -r * i;
            break;
    }
    return v;
}

Matrix kron(const Matrix &high, const Matrix &low) {
    Matrix out(high.rows() * low.rows(), high.cols() * low.cols());
    for (Eigen::Index a = 0; a < high.rows(); a++) {
        for (Eigen::Index b = 0; b < high.cols(); b++) {
            out.block(a * low.rows(), b * low.cols(), low.rows(), low.cols()) = high(a, b) * low;
        }
    }
    return out;
}

Matrix kron_qubits(std::span<const Matrix> per_qubit) {
    Matrix out = Matrix::Identity(1, 1);
    for (const auto &m : per_qubit) {
        out = kron(m, out);
    }
    return out;
}

void apply_matrix(Vector &state, const Matrix &u, std::span<const uint32_t> targets) {
    const size_t k = targets.size();
    const size_t d = size_t{1} << k;
    if (static_cast<size_t>(u.rows()) != d || static_cast<size_t>(u.cols()) != d) {
        throw DimensionError("matrix size does not match target count");
    }
    const size_t total = static_cast<size_t>(state.size());
    size_t target_mask = 0;
    std::vector<size_t> offsets(d, 0);
    for (size_t j = 0; j < k; j++) {
        size_t bit = size_t{1} << targets[j];
        if (bit >= total) {
            throw std::out_of_range("target qubit " + std::to_string(targets[j]) + " out of range");
        }
        target_mask |= bit;
    }
    for (size_t local = 0; local < d; local++) {
        for (size_t j = 0; j < k; j++) {
            if (local & (size_t{1} << j)) {
                offsets[local] |= size_t{1} << targets[j];
            }
        }
    }
    std::vector<Complex> in(d);
    for (size_t base = 0; base < total; base++) {
        if (base & target_mask) {
            continue;
        }
        for (size_t a = 0; a < d; a++) {
            in[a] = state[base | offsets[a]];
        }
        for (size_t a = 0; a < d; a++) {
            Complex acc = 0;
            for (size_t b = 0; b < d; b++) {
                acc += u(a, b) * in[b];
            }
            state[base | offsets[a]] = acc;
        }
    }
}

Matrix circuit_unitary(const Circuit &c) {
    if (c.num_qubits > kMaxPureQubits) {
        throw OracleOverflow("circuit too large for a dense unitary");
    }
    size_t d = size_t{1} << c.num_qubits;
    Matrix u(d, d);
    for (size_t col = 0; col < d; col++) {
        Vector v = Vector::Zero(d);
        v[col] = 1;
        for (const auto &inst : c.instructions) {
            const auto *g = std::get_if<GateOp>(&inst);
            if (!g) {
                throw std::invalid_argument("circuit_unitary needs a gate-only circuit");
            }
            apply_gate(v, g->gate);
        }
        u.col(col) = v;
    }
    return u;
}

UnitaryTable default_unitaries() {
    Matrix t = Matrix::Identity(2, 2);
    t(1, 1) = std::polar(1.0, std::numbers::pi / 4);
    return {{"T", t}};
}

PureRun simulate_pure(const Circuit &c, const StateVector &input, uint64_t seed, const UnitaryTable &unitaries) {
    Vector state = input.amplitudes();
    check_state_fits(c, state, kMaxPureQubits);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<uint8_t> bits(c.num_bits, 0);
    auto measure = [&](uint32_t q) {
        Vector one = state;
        double p1 = project(one, q, true);
        bool b = unit(rng) < p1;
        if (b) {
            state = one / std::sqrt(p1);
        } else {
            project(state, q, false);
            state /= std::sqrt(1 - p1);
        }
        return b;
    };
    for (const auto &inst : c.instructions) {
        std::visit(overloaded{
                       [&](const GateOp &op) { apply_gate(state, op.gate); },
                       [&](const NonCliffordOp &op) { apply_matrix(state, unitary_for(op, unitaries), op.targets); },
                       [&](const MeasureOp &op) { bits[op.bit] = measure(op.qubit); },
                       [&](const ConditionalOp &op) {
                           if (bits[op.bit]) {
                               apply_gate(state, op.gate);
                           }
                       },
                       [&](const ResetOp &op) {
                           if (measure(op.qubit)) {
                               apply_gate(state, CliffordGate::one(GateKind::X, op.qubit));
                           }
                       },
                   },
                   inst);
    }
    state.normalize();
    return {StateVector(std::move(state)), std::move(bits)};
}

Distribution distribution(const Circuit &c, const StateVector &input, const UnitaryTable &unitaries,
                          size_t max_measurements) {
    check_state_fits(c, input.amplitudes(), kMaxInternalQubits);
    if (c.count_measurements() > max_measurements) {
        throw OracleOverflow("too many measurements for branch enumeration: " +
                             std::to_string(c.count_measurements()));
    }
    Distribution out;
    std::vector<uint8_t> bits(c.num_bits, 0);
    auto leaf = [&](const std::vector<uint8_t> &b, const Vector &state) { out[bit_key(b)] += state.squaredNorm(); };
    walk(c, 0, input.amplitudes(), bits, unitaries, leaf);
    return out;
}

std::vector<Branch> branch_states(const Circuit &c, const Vector &input, const UnitaryTable &unitaries,
                                  size_t max_measurements) {
    check_state_fits(c, input, kMaxInternalQubits);
    if (c.count_measurements() > max_measurements) {
        throw OracleOverflow("too many measurements for branch enumeration: " +
                             std::to_string(c.count_measurements()));
    }
    std::vector<Branch> out;
    std::vector<uint8_t> bits(c.num_bits, 0);
    auto leaf = [&](const std::vector<uint8_t> &b, const Vector &state) { out.push_back({bit_key(b), state}); };
    walk(c, 0, input, bits, unitaries, leaf);
    return out;
}

Vector purify(const DensityMatrix &rho) {
    const Matrix &m = rho.matrix();
    const Eigen::Index d = m.rows();
    Eigen::SelfAdjointEigenSolver<Matrix> eig(m);
    Vector out = Vector::Zero(d * d);
    for (Eigen::Index k = 0; k < d; k++) {
        double lambda = std::max(0.0, eig.eigenvalues()[k]);
        out.segment(k * d, d) = std::sqrt(lambda) * eig.eigenvectors().col(k);
    }
    out.normalize();
    return out;
}

Vector embed_ancilla(size_t circuit_qubits, const Vector &ancilla, size_t ancilla_system_qubits,
                     std::span<const uint32_t> placement) {
    size_t anc_total = qubits_for_dim(static_cast<size_t>(ancilla.size()), "ancilla");
    if (placement.size() != ancilla_system_qubits || anc_total < ancilla_system_qubits) {
        throw DimensionError("ancilla placement does not match ancilla size");
    }
    size_t purifiers = anc_total - ancilla_system_qubits;
    size_t total = circuit_qubits + purifiers;
    if (total > kMaxInternalQubits) {
        throw OracleOverflow("register too large: " + std::to_string(total) + " qubits");
    }
    for (uint32_t q : placement) {
        if (q >= circuit_qubits) {
            throw std::out_of_range("ancilla placement qubit " + std::to_string(q) + " out of range");
        }
    }
    Vector out = Vector::Zero(size_t{1} << total);
    for (Eigen::Index a = 0; a < ancilla.size(); a++) {
        size_t idx = 0;
        for (size_t k = 0; k < ancilla_system_qubits; k++) {
            if ((a >> k) & 1) {
                idx |= size_t{1} << placement[k];
            }
        }
        idx |= (static_cast<size_t>(a) >> ancilla_system_qubits) << circuit_qubits;
        out[idx] = ancilla[a];
    }
    return out;
}

Distribution distribution(const Circuit &c, const DensityMatrix &ancilla, std::span<const uint32_t> placement,
                          const UnitaryTable &unitaries, size_t max_measurements) {
    Vector full = embed_ancilla(c.num_qubits, purify(ancilla), ancilla.num_qubits(), placement);
    return distribution(c, StateVector(std::move(full)), unitaries, max_measurements);
}

Matrix partial_trace(const Vector &state, std::span<const uint32_t> keep) {
    size_t n = qubits_for_dim(static_cast<size_t>(state.size()), "state");
    size_t keep_mask = 0;
    for (uint32_t q : keep) {
        if (q >= n) {
            throw std::out_of_range("partial_trace qubit out of range");
        }
        keep_mask |= size_t{1} << q;
    }
    std::vector<uint32_t> rest;
    for (uint32_t q = 0; q < n; q++) {
        if (!(keep_mask & (size_t{1} << q))) {
            rest.push_back(q);
        }
    }
    size_t dk = size_t{1} << keep.size();
    size_t dr = size_t{1} << rest.size();
    Matrix psi = Matrix::Zero(dk, dr);
    for (size_t i = 0; i < static_cast<size_t>(state.size()); i++) {
        size_t k = 0, r = 0;
        for (size_t j = 0; j < keep.size(); j++) {
            k |= ((i >> keep[j]) & 1) << j;
        }
        for (size_t j = 0; j < rest.size(); j++) {
            r |= ((i >> rest[j]) & 1) << j;
        }
        psi(k, r) = state[i];
    }
    return psi * psi.adjoint();
}

Channel channel_of_circuit(const Circuit &c, std::span<const uint32_t> subsystem, const Vector &environment,
                           const UnitaryTable &unitaries) {
    const size_t n = c.num_qubits;
    if (n > kMaxDensityQubits) {
        throw OracleOverflow("channel_of_circuit limited to " + std::to_string(kMaxDensityQubits) + " qubits");
    }
    size_t sys_mask = 0;
    for (uint32_t q : subsystem) {
        if (q >= n) {
            throw std::out_of_range("subsystem qubit out of range");
        }
        sys_mask |= size_t{1} << q;
    }
    std::vector<uint32_t> complement;
    for (uint32_t q = 0; q < n; q++) {
        if (!(sys_mask & (size_t{1} << q))) {
            complement.push_back(q);
        }
    }
    size_t env_qubits = qubits_for_dim(static_cast<size_t>(environment.size()), "environment");
    if (env_qubits < complement.size()) {
        throw DimensionError("environment state smaller than the traced-out register");
    }
    const size_t purifiers = env_qubits - complement.size();
    const size_t k = subsystem.size();
    const size_t d = size_t{1} << k;
    const size_t total = n + purifiers + k;
    if (total > kMaxInternalQubits) {
        throw OracleOverflow("channel register too large");
    }

    Vector init = Vector::Zero(size_t{1} << total);
    const double norm = 1 / std::sqrt(static_cast<double>(d));
    for (Eigen::Index e = 0; e < environment.size(); e++) {
        size_t base = 0;
        for (size_t j = 0; j < complement.size(); j++) {
            base |= ((static_cast<size_t>(e) >> j) & 1) << complement[j];
        }
        base |= (static_cast<size_t>(e) >> complement.size()) << n;
        for (size_t i = 0; i < d; i++) {
            size_t idx = base | (i << (n + purifiers));
            for (size_t j = 0; j < k; j++) {
                idx |= ((i >> j) & 1) << subsystem[j];
            }
            init[idx] = environment[e] * norm;
        }
    }

    std::vector<uint32_t> keep(subsystem.begin(), subsystem.end());
    for (size_t j = 0; j < k; j++) {
        keep.push_back(static_cast<uint32_t>(n + purifiers + j));
    }
    Channel out;
    out.dim = d;
    out.choi = Matrix::Zero(d * d, d * d);
    std::vector<uint8_t> bits(c.num_bits, 0);
    auto leaf = [&](const std::vector<uint8_t> &b, const Vector &state) {
        Matrix rho = partial_trace(state, keep);
        out.choi += rho;
        auto [it, fresh] = out.branches.try_emplace(bit_key(b), Matrix::Zero(d * d, d * d));
        it->second += rho;
    };
    walk(c, 0, std::move(init), bits, unitaries, leaf);
    return out;
}

double process_fidelity(const Matrix &choi, const Matrix &unitary) {
    const Eigen::Index d = unitary.rows();
    if (choi.rows() != d * d) {
        throw DimensionError("Choi matrix does not match unitary size");
    }
    Vector phi(d * d);
    for (Eigen::Index r = 0; r < d; r++) {
        for (Eigen::Index s = 0; s < d; s++) {
            phi[s + d * r] = unitary(s, r) / std::sqrt(static_cast<double>(d));
        }
    }
    return (phi.adjoint() * choi * phi)(0, 0).real();
}

Matrix apply_choi(const Matrix &choi, const Matrix &rho_in) {
    const Eigen::Index d = rho_in.rows();
    Matrix out = Matrix::Zero(d, d);
    for (Eigen::Index o = 0; o < d; o++) {
        for (Eigen::Index o2 = 0; o2 < d; o2++) {
            Complex acc = 0;
            for (Eigen::Index r = 0; r < d; r++) {
                for (Eigen::Index r2 = 0; r2 < d; r2++) {
                    acc += choi(o + d * r, o2 + d * r2) * rho_in(r, r2);
                }
            }
            out(o, o2) = acc * static_cast<double>(d);
        }
    }
    return out;
}

double max_output_trace_distance(const Matrix &choi_a, const Matrix &choi_b) {
    const Eigen::Index dd = choi_a.rows();
    Eigen::Index d = 1;
    while (d * d < dd) {
        d *= 2;
    }
    size_t k = qubits_for_dim(static_cast<size_t>(d), "channel");
    size_t inputs = 1;
    for (size_t j = 0; j < k; j++) {
        inputs *= 6;
    }
    double worst = 0;
    for (size_t code = 0; code < inputs; code++) {
        std::vector<Matrix> factors;
        size_t rem = code;
        for (size_t j = 0; j < k; j++) {
            Vector v = frame_state(static_cast<FrameLabel>(rem % 6));
            rem /= 6;
            factors.push_back(v * v.adjoint());
        }
        Matrix rho = kron_qubits(factors);
        Matrix diff = apply_choi(choi_a, rho) - apply_choi(choi_b, rho);
        Eigen::SelfAdjointEigenSolver<Matrix> eig(diff, Eigen::EigenvaluesOnly);
        worst = std::max(worst, 0.5 * eig.eigenvalues().cwiseAbs().sum());
    }
    return worst;
}

double overlap(const Vector &a, const Vector &b) {
    return std::abs(a.dot(b));
}

double max_eigenvalue(const Matrix &hermitian) {
    Eigen::SelfAdjointEigenSolver<Matrix> eig(hermitian, Eigen::EigenvaluesOnly);
    return eig.eigenvalues().maxCoeff();
}

Vector random_state(size_t num_qubits, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    Vector v(size_t{1} << num_qubits);
    for (Eigen::Index i = 0; i < v.size(); i++) {
        v[i] = Complex(g(rng), g(rng));
    }
    v.normalize();
    return v;
}

Matrix random_density(size_t num_qubits, std::mt19937_64 &rng, size_t rank) {
    std::normal_distribution<double> g;
    const Eigen::Index d = Eigen::Index{1} << num_qubits;
    const Eigen::Index r = rank == 0 ? d : static_cast<Eigen::Index>(rank);
    Matrix a(d, r);
    for (Eigen::Index i = 0; i < d; i++) {
        for (Eigen::Index j = 0; j < r; j++) {
            a(i, j) = Complex(g(rng), g(rng));
        }
    }
    Matrix rho = a * a.adjoint();
    rho /= rho.trace().real();
    // Symmetrize away rounding so the Hermiticity check sees exact zeros.
    return (rho + rho.adjoint()) / 2.0;
}

bool is_clifford_unitary(const Matrix &u, double tol) {
    const size_t n = qubits_for_dim(static_cast<size_t>(u.rows()), "unitary");
    const double d = static_cast<double>(u.rows());
    size_t paulis = size_t{1} << (2 * n);
    std::vector<Matrix> basis;
    basis.reserve(paulis);
    for (size_t code = 0; code < paulis; code++) {
        PauliString p(n);
        for (size_t q = 0; q < n; q++) {
            p.set_letter(q, "IXYZ"[(code >> (2 * q)) & 3]);
        }
        basis.push_back(pauli_matrix(p));
    }
    for (size_t q = 0; q < n; q++) {
        for (char letter : {'X', 'Z'}) {
            Matrix v = u * pauli_matrix(PauliString::single(n, q, letter)) * u.adjoint();
            bool found = false;
            for (const auto &b : basis) {
                if (std::abs(std::abs((b.adjoint() * v).trace() / d) - 1) <= tol) {
                    found = true;
                    break;
                }
            }
            if (!found) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace stabmagic
