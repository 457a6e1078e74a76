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

#include "stabmagic/magic_decomp.h"

#include <bit>
#include <map>

namespace stabmagic {

namespace {

size_t pauli_count(size_t q) {
    return size_t{1} << (2 * q);
}

/// Tr(P rho) using P|m> = c_m |m ^ xmask>, never forming P densely.
Complex trace_with_pauli(const Matrix &rho, const PauliString &p) {
    size_t xmask = 0, zmask = 0, ys = 0;
    for (size_t q = 0; q < p.num_qubits(); q++) {
        xmask |= size_t{p.x(q)} << q;
        zmask |= size_t{p.z(q)} << q;
        ys += p.x(q) && p.z(q);
    }
    static const Complex kPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    Complex base = kPow[(ys + p.phase()) & 3];
    Complex acc = 0;
    for (Eigen::Index m = 0; m < rho.rows(); m++) {
        double sign = (std::popcount(static_cast<size_t>(m) & zmask) & 1) ? -1.0 : 1.0;
        acc += sign * rho(m, static_cast<Eigen::Index>(static_cast<size_t>(m) ^ xmask));
    }
    return base * acc;
}

struct Projector {
    double sign;
    FrameLabel label;
};

std::array<Projector, 2> eigen_projectors(char letter) {
    switch (letter) {
        case 'X':
            return {{{1, FrameLabel::XPlus}, {-1, FrameLabel::XMinus}}};
        case 'Y':
            return {{{1, FrameLabel::YPlus}, {-1, FrameLabel::YMinus}}};
        case 'Z':
            return {{{1, FrameLabel::ZPlus}, {-1, FrameLabel::ZMinus}}};
        default:
            return {{{1, FrameLabel::ZPlus}, {1, FrameLabel::ZMinus}}};
    }
}

}  // namespace

PauliString PauliDecomposition::pauli_for_code(size_t num_qubits, size_t code) {
    PauliString p(num_qubits);
    for (size_t q = 0; q < num_qubits; q++) {
        p.set_letter(q, "IXYZ"[(code >> (2 * q)) & 3]);
    }
    return p;
}

double PauliDecomposition::coefficient(const PauliString &p) const {
    if (p.num_qubits() != num_qubits) {
        throw DimensionError("Pauli size does not match decomposition");
    }
    size_t code = 0;
    for (size_t q = 0; q < num_qubits; q++) {
        size_t letter = p.x(q) ? (p.z(q) ? 2 : 1) : (p.z(q) ? 3 : 0);
        code |= letter << (2 * q);
    }
    double c = coefficients[code];
    return p.phase() == 2 ? -c : c;
}

double StabFrameDecomposition::weight_sum() const {
    double total = 0;
    for (const auto &t : terms) {
        total += t.weight;
    }
    return total;
}

PauliDecomposition pauli_coefficients(const DensityMatrix &rho) {
    const size_t q = rho.num_qubits();
    if (q > kMaxAncillaQubits) {
        throw std::invalid_argument("ancilla limited to " + std::to_string(kMaxAncillaQubits) + " qubits");
    }
    const double dim = static_cast<double>(size_t{1} << q);
    PauliDecomposition out{q, std::vector<double>(pauli_count(q))};
    for (size_t code = 0; code < pauli_count(q); code++) {
        Complex tr = trace_with_pauli(rho.matrix(), PauliDecomposition::pauli_for_code(q, code));
        if (std::abs(tr.imag()) > 1e-12 * dim) {
            throw std::invalid_argument("Pauli coefficient has an imaginary part; input is not Hermitian");
        }
        out.coefficients[code] = tr.real() / dim;
    }
    // Trace normalization fixes the identity coefficient exactly.
    out.coefficients[0] = 1 / dim;
    return out;
}

StabFrameDecomposition stabilizer_frame(const PauliDecomposition &decomp) {
    const size_t q = decomp.num_qubits;
    std::map<std::vector<FrameLabel>, double> collected;
    std::vector<FrameLabel> labels(q);
    for (size_t code = 0; code < decomp.coefficients.size(); code++) {
        double c = decomp.coefficients[code];
        if (c == 0) {
            continue;
        }
        PauliString p = PauliDecomposition::pauli_for_code(q, code);
        for (size_t choice = 0; choice < (size_t{1} << q); choice++) {
            double w = c;
            for (size_t k = 0; k < q; k++) {
                Projector proj = eigen_projectors(p.letter(k))[(choice >> k) & 1];
                w *= proj.sign;
                labels[k] = proj.label;
            }
            collected[labels] += w;
        }
    }
    StabFrameDecomposition out{q, {}};
    for (auto &[key, w] : collected) {
        if (std::abs(w) >= kFramePruneThreshold) {
            out.terms.push_back({w, key});
        }
    }
    return out;
}

Matrix reconstruct(const PauliDecomposition &decomp) {
    const size_t q = decomp.num_qubits;
    const Eigen::Index d = Eigen::Index{1} << q;
    Matrix out = Matrix::Zero(d, d);
    for (size_t code = 0; code < decomp.coefficients.size(); code++) {
        out += decomp.coefficients[code] * pauli_matrix(PauliDecomposition::pauli_for_code(q, code));
    }
    return out;
}

Matrix reconstruct(const StabFrameDecomposition &decomp) {
    const Eigen::Index d = Eigen::Index{1} << decomp.num_qubits;
    Matrix out = Matrix::Zero(d, d);
    std::vector<Matrix> factors(decomp.num_qubits);
    for (const auto &term : decomp.terms) {
        for (size_t k = 0; k < decomp.num_qubits; k++) {
            Vector v = frame_state(term.labels[k]);
            factors[k] = v * v.adjoint();
        }
        out += term.weight * kron_qubits(factors);
    }
    return out;
}

nlohmann::json to_json(const PauliDecomposition &decomp) {
    nlohmann::json coeffs = nlohmann::json::object();
    for (size_t code = 0; code < decomp.coefficients.size(); code++) {
        coeffs[PauliDecomposition::pauli_for_code(decomp.num_qubits, code).str()] = decomp.coefficients[code];
    }
    return {{"num_qubits", decomp.num_qubits}, {"coefficients", coeffs}};
}

nlohmann::json to_json(const StabFrameDecomposition &decomp) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto &t : decomp.terms) {
        nlohmann::json labels = nlohmann::json::array();
        for (FrameLabel l : t.labels) {
            labels.push_back(std::string(frame_label_name(l)));
        }
        terms.push_back({{"weight", t.weight}, {"labels", labels}});
    }
    return {{"num_qubits", decomp.num_qubits}, {"terms", terms}};
}

StabFrameDecomposition frame_from_json(const nlohmann::json &j) {
    StabFrameDecomposition out{j.at("num_qubits").get<size_t>(), {}};
    for (const auto &t : j.at("terms")) {
        FrameTerm term{t.at("weight").get<double>(), {}};
        for (const auto &l : t.at("labels")) {
            auto label = frame_label_from_name(l.get<std::string>());
            if (!label) {
                throw std::invalid_argument("unknown frame label " + l.dump());
            }
            term.labels.push_back(*label);
        }
        if (term.labels.size() != out.num_qubits) {
            throw std::invalid_argument("frame term has the wrong number of labels");
        }
        out.terms.push_back(std::move(term));
    }
    return out;
}

}  // namespace stabmagic
