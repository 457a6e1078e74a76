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

#include "stabmagic/gadget_lib.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "stabmagic/json_io.h"

namespace stabmagic {

namespace {

constexpr double kUnitaryTolerance = 1e-10;

const char *const kReusableSBody =
    "CNOT 1 0\n"
    "H 0\n"
    "CNOT 1 0\n"
    "H 0\n";

Vector phase_state(double angle) {
    Vector v(2);
    v << 1 / std::numbers::sqrt2, std::polar(1 / std::numbers::sqrt2, angle);
    return v;
}

Matrix sqrt_y_matrix() {
    Matrix m(2, 2);
    const Complex a(0.5, 0.5);
    m << a, -a, a, a;
    return m;
}

std::string repeat(const std::string &s, int times) {
    std::string out;
    for (int k = 0; k < times; k++) {
        out += s;
    }
    return out;
}

/// |tr(A^dagger B)| / d: 1 iff A = B up to phase, for unitaries.
double phase_free_overlap(const Matrix &a, const Matrix &b) {
    return std::abs((a.adjoint() * b).trace()) / static_cast<double>(a.rows());
}

bool body_uses_target(const GadgetDef &g) {
    if (g.data_qubits() != 1) {
        return false;
    }
    const Matrix &u = g.claimed_unitary();
    std::vector<GateKind> targets;
    for (GateKind kind : kAllGateKinds) {
        if (gate_arity(kind) != 1) {
            continue;
        }
        Matrix m = gate_matrix(kind);
        if (phase_free_overlap(m, u) > 1 - 1e-9 || phase_free_overlap(m, u.adjoint()) > 1 - 1e-9) {
            targets.push_back(kind);
            targets.push_back(inverse_kind(kind));
        }
    }
    for (const auto &inst : g.body().instructions) {
        const CliffordGate *gate = nullptr;
        if (const auto *op = std::get_if<GateOp>(&inst)) {
            gate = &op->gate;
        } else if (const auto *op = std::get_if<ConditionalOp>(&inst)) {
            gate = &op->gate;
        }
        if (gate && std::find(targets.begin(), targets.end(), gate->kind) != targets.end()) {
            return true;
        }
    }
    return false;
}

/// Product frame states of k qubits.
std::vector<Vector> frame_inputs(size_t k) {
    std::vector<Vector> out = {Vector::Ones(1)};
    for (size_t q = 0; q < k; q++) {
        std::vector<Vector> next;
        for (const auto &v : out) {
            for (FrameLabel l : {FrameLabel::ZPlus, FrameLabel::ZMinus, FrameLabel::XPlus, FrameLabel::XMinus,
                                 FrameLabel::YPlus, FrameLabel::YMinus}) {
                Matrix col = kron(frame_state(l), v);
                next.push_back(col.col(0));
            }
        }
        out = std::move(next);
    }
    return out;
}

Matrix psd_sqrt(const Matrix &m) {
    Eigen::SelfAdjointEigenSolver<Matrix> eig(m);
    Eigen::VectorXd vals = eig.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    return eig.eigenvectors() * vals.asDiagonal() * eig.eigenvectors().adjoint();
}

}  // namespace

GadgetDef::GadgetDef(std::string name, DensityMatrix ancilla, Circuit body, Matrix claimed_unitary, bool reusable)
    : name_(std::move(name)),
      ancilla_(std::move(ancilla)),
      body_(std::move(body)),
      claimed_(std::move(claimed_unitary)),
      reusable_(reusable) {
    check();
}

GadgetDef::GadgetDef(std::string name, const StateVector &ancilla, Circuit body, Matrix claimed_unitary,
                     bool reusable)
    : name_(std::move(name)),
      ancilla_(DensityMatrix::pure(ancilla)),
      pure_(ancilla.amplitudes()),
      body_(std::move(body)),
      claimed_(std::move(claimed_unitary)),
      reusable_(reusable) {
    check();
}

void GadgetDef::check() const {
    const std::string where = "gadget '" + name_ + "': ";
    if (name_.empty()) {
        throw GadgetError("gadget name is empty");
    }
    const size_t q = ancilla_.num_qubits();
    if (q == 0) {
        throw GadgetError(where + "needs at least one ancilla qubit");
    }
    if (body_.num_qubits <= q) {
        throw GadgetError(where + "body has no data qubits");
    }
    if (body_.has_non_clifford()) {
        throw GadgetError(where + "body contains non-Clifford instructions");
    }
    if (auto diags = validate(body_); !diags.empty()) {
        throw GadgetError(where + "invalid body: " + diags.front().message);
    }
    if (reusable_) {
        for (const auto &inst : body_.instructions) {
            std::optional<uint32_t> touched;
            if (const auto *m = std::get_if<MeasureOp>(&inst)) {
                touched = m->qubit;
            } else if (const auto *r = std::get_if<ResetOp>(&inst)) {
                touched = r->qubit;
            }
            if (touched && *touched < q) {
                throw GadgetError(where + "reusable gadget measures or resets its ancilla");
            }
        }
    }
    const Eigen::Index d = Eigen::Index{1} << data_qubits();
    if (claimed_.rows() != d || claimed_.cols() != d) {
        throw GadgetError(where + "claimed unitary must be " + std::to_string(d) + "x" + std::to_string(d));
    }
    if (!(claimed_.adjoint() * claimed_).isIdentity(kUnitaryTolerance)) {
        throw GadgetError(where + "claimed matrix is not unitary");
    }
}

Vector GadgetDef::ancilla_environment() const {
    return pure_ ? *pure_ : purify(ancilla_);
}

GadgetDef builtin_gadget(std::string_view name) {
    const std::string s_body = kReusableSBody;
    const std::string sqrt_x_body = "H 1\n" + s_body + "H 1\n";
    if (name == "S_reusable") {
        return GadgetDef("S_reusable", StateVector(phase_state(std::numbers::pi / 2)),
                         parse_circuit("qubits 2\n" + s_body), gate_matrix(GateKind::S), true);
    }
    if (name == "SqrtX_reusable") {
        Matrix h = gate_matrix(GateKind::H);
        return GadgetDef("SqrtX_reusable", StateVector(phase_state(std::numbers::pi / 2)),
                         parse_circuit("qubits 2\n" + sqrt_x_body), h * gate_matrix(GateKind::S) * h, true);
    }
    if (name == "SqrtY_reusable") {
        // S^dagger, then sqrt(X), then S: three S bodies stand in for S^dagger.
        return GadgetDef("SqrtY_reusable", StateVector(phase_state(std::numbers::pi / 2)),
                         parse_circuit("qubits 2\n" + repeat(s_body, 3) + sqrt_x_body + s_body), sqrt_y_matrix(),
                         true);
    }
    if (name == "T_inject") {
        Matrix t = Matrix::Identity(2, 2);
        t(1, 1) = std::polar(1.0, std::numbers::pi / 4);
        return GadgetDef("T_inject", StateVector(phase_state(std::numbers::pi / 4)),
                         parse_circuit("qubits 2\nbits 1\nCNOT 1 0\nM 0 -> c0\nIF c0 S 1\n"), t, false);
    }
    throw UnknownGadget("unknown builtin gadget '" + std::string(name) + "'");
}

GadgetLibrary GadgetLibrary::builtins() {
    GadgetLibrary lib;
    for (const char *name : {"T_inject", "S_reusable", "SqrtX_reusable", "SqrtY_reusable"}) {
        lib.add(builtin_gadget(name));
    }
    lib.add_alias("T", "T_inject");
    return lib;
}

void GadgetLibrary::add(GadgetDef g) {
    std::string name = g.name();
    aliases_.erase(name);
    gadgets_.insert_or_assign(std::move(name), std::move(g));
}

void GadgetLibrary::add_alias(std::string alias, std::string target) {
    if (!gadgets_.count(target)) {
        throw UnknownGadget("alias target '" + target + "' not in library");
    }
    if (gadgets_.count(alias)) {
        throw GadgetError("alias '" + alias + "' shadows a gadget");
    }
    aliases_.insert_or_assign(std::move(alias), std::move(target));
}

const GadgetDef *GadgetLibrary::find(std::string_view name) const {
    if (auto it = gadgets_.find(name); it != gadgets_.end()) {
        return &it->second;
    }
    if (auto it = aliases_.find(name); it != aliases_.end()) {
        return &gadgets_.at(it->second);
    }
    return nullptr;
}

const GadgetDef &GadgetLibrary::get(std::string_view name) const {
    const GadgetDef *g = find(name);
    if (!g) {
        throw UnknownGadget("unresolved gadget name '" + std::string(name) + "'");
    }
    return *g;
}

std::vector<std::string> GadgetLibrary::names() const {
    std::vector<std::string> out;
    for (const auto &[name, g] : gadgets_) {
        out.push_back(name);
    }
    for (const auto &[alias, target] : aliases_) {
        out.push_back(alias);
    }
    return out;
}

UnitaryTable GadgetLibrary::unitaries() const {
    UnitaryTable out;
    for (const auto &name : names()) {
        out[name] = get(name).claimed_unitary();
    }
    return out;
}

double state_fidelity(const Matrix &a, const Matrix &b) {
    Matrix sa = psd_sqrt(a);
    Matrix inner = sa * b * sa;
    Eigen::SelfAdjointEigenSolver<Matrix> eig(0.5 * (inner + inner.adjoint()));
    double tr = eig.eigenvalues().cwiseMax(0.0).cwiseSqrt().sum();
    return tr * tr;
}

VerifyReport verify_gadget(const GadgetDef &g, const VerifyOptions &options) {
    const size_t q = g.ancilla_qubits();
    const size_t k = g.data_qubits();
    if (q + k > kMaxDensityQubits) {
        throw OracleOverflow("verify_gadget limited to " + std::to_string(kMaxDensityQubits) + " qubits");
    }
    const Matrix &u = g.claimed_unitary();
    const Vector env = g.ancilla_environment();
    const size_t env_system = size_t{1} << q;

    VerifyReport r;
    r.name = g.name();
    r.reusable = g.reusable();
    r.uses_target_gate = body_uses_target(g);

    std::vector<uint32_t> data(k), anc(q);
    for (uint32_t j = 0; j < k; j++) {
        data[j] = static_cast<uint32_t>(q + j);
    }
    for (uint32_t j = 0; j < q; j++) {
        anc[j] = j;
    }

    Channel ch = channel_of_circuit(g.body(), data, env);
    r.process_fidelity = process_fidelity(ch.choi, u);
    for (const auto &[key, choi] : ch.branches) {
        double weight = choi.trace().real();
        r.branch_fidelity[key] = weight > 0 ? process_fidelity(choi / weight, u) : 0.0;
    }

    std::vector<Vector> inputs = frame_inputs(k);
    std::mt19937_64 rng(options.seed);
    for (size_t s = 0; s < options.random_inputs; s++) {
        inputs.push_back(random_state(k, rng));
    }
    r.min_state_fidelity = 1;
    double worst_ancilla = 1;
    for (const Vector &psi : inputs) {
        Vector full = Vector::Zero(env.size() * psi.size());
        for (Eigen::Index e = 0; e < env.size(); e++) {
            size_t sys = static_cast<size_t>(e) % env_system;
            size_t pur = static_cast<size_t>(e) / env_system;
            for (Eigen::Index x = 0; x < psi.size(); x++) {
                size_t idx = sys | (static_cast<size_t>(x) << q) | (pur << (q + k));
                full[static_cast<Eigen::Index>(idx)] = env[e] * psi[x];
            }
        }
        Matrix rho_data = Matrix::Zero(psi.size(), psi.size());
        Matrix rho_anc = Matrix::Zero(Eigen::Index{1} << q, Eigen::Index{1} << q);
        for (const auto &b : branch_states(g.body(), full)) {
            rho_data += partial_trace(b.state, data);
            if (g.reusable()) {
                rho_anc += partial_trace(b.state, anc);
            }
        }
        Vector target = u * psi;
        r.min_state_fidelity =
            std::min(r.min_state_fidelity, (target.adjoint() * rho_data * target)(0, 0).real());
        r.leakage = std::max(r.leakage, 1 - max_eigenvalue(rho_data));
        if (g.reusable()) {
            worst_ancilla = std::min(worst_ancilla, state_fidelity(g.ancilla_state().matrix(), rho_anc));
        }
    }
    r.leakage = std::max(r.leakage, 0.0);
    r.inputs_checked = inputs.size();
    r.unitary_match = std::min(r.process_fidelity, r.min_state_fidelity);

    const double tol = options.tolerance;
    if (r.unitary_match < 1 - tol) {
        r.failures.push_back("data channel differs from the claimed unitary");
    }
    for (const auto &[key, f] : r.branch_fidelity) {
        if (f < 1 - tol) {
            r.failures.push_back("outcome branch '" + key + "' does not implement the claimed unitary");
        }
    }
    if (g.reusable()) {
        r.ancilla_restored = worst_ancilla;
        if (worst_ancilla < 1 - tol) {
            r.failures.push_back("ancilla state is not restored");
        }
        if (r.leakage > tol) {
            r.failures.push_back("output is entangled with the ancilla");
        }
    }
    r.passed = r.failures.empty();
    return r;
}

nlohmann::json gadget_to_json(const GadgetDef &g) {
    return {
        {"name", g.name()},
        {"ancilla_qubits", g.ancilla_qubits()},
        {"ancilla_state", g.ancilla_pure() ? vector_to_json(*g.ancilla_pure()) : matrix_to_json(g.ancilla_state().matrix())},
        {"body", render_circuit(g.body())},
        {"claimed_unitary", matrix_to_json(g.claimed_unitary())},
        {"reusable", g.reusable()},
    };
}

GadgetDef gadget_from_json(const nlohmann::json &j) {
    if (!j.is_object()) {
        throw GadgetError("gadget definition must be a JSON object");
    }
    for (const char *field : {"name", "ancilla_qubits", "ancilla_state", "body", "claimed_unitary", "reusable"}) {
        if (!j.contains(field)) {
            throw GadgetError(std::string("gadget definition missing field '") + field + "'");
        }
    }
    std::string name = j.at("name").get<std::string>();
    size_t q = j.at("ancilla_qubits").get<size_t>();
    Circuit body = parse_circuit(j.at("body").get<std::string>());
    Matrix u = matrix_from_json(j.at("claimed_unitary"));
    bool reusable = j.at("reusable").get<bool>();
    const auto &state = j.at("ancilla_state");
    auto check_size = [&](size_t n) {
        if (n != q) {
            throw GadgetError("ancilla_state has " + std::to_string(n) + " qubits, ancilla_qubits says " +
                              std::to_string(q));
        }
    };
    if (json_is_matrix(state)) {
        DensityMatrix rho(matrix_from_json(state));
        check_size(rho.num_qubits());
        return GadgetDef(std::move(name), std::move(rho), std::move(body), std::move(u), reusable);
    }
    StateVector psi(vector_from_json(state));
    check_size(psi.num_qubits());
    return GadgetDef(std::move(name), psi, std::move(body), std::move(u), reusable);
}

nlohmann::json report_to_json(const VerifyReport &r) {
    nlohmann::json branches = nlohmann::json::object();
    for (const auto &[key, f] : r.branch_fidelity) {
        branches[key] = f;
    }
    nlohmann::json j = {
        {"name", r.name},
        {"reusable", r.reusable},
        {"unitary_match", r.unitary_match},
        {"process_fidelity", r.process_fidelity},
        {"min_state_fidelity", r.min_state_fidelity},
        {"branch_fidelity", branches},
        {"ancilla_restored", nullptr},
        {"leakage", r.leakage},
        {"uses_target_gate", r.uses_target_gate},
        {"inputs_checked", r.inputs_checked},
        {"passed", r.passed},
        {"failures", r.failures},
    };
    if (r.ancilla_restored) {
        j["ancilla_restored"] = *r.ancilla_restored;
    }
    return j;
}

}  // namespace stabmagic
