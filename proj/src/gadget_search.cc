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

#include "stabmagic/gadget_search.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <unordered_map>

namespace stabmagic {

namespace {

using Small = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, 0, 4, 4>;

constexpr double kFamilyThreshold = 8;
constexpr double kNearSolution = 1e-4;

Vector ancilla_from_angles(double theta, double phi) {
    Vector m(2);
    m << std::cos(theta / 2), std::polar(std::sin(theta / 2), phi);
    return m;
}

std::array<double, 3> bloch_of(const Vector &m) {
    Complex a = m[0], b = m[1];
    Complex ab = std::conj(a) * b;
    return {2 * ab.real(), 2 * ab.imag(), std::norm(a) - std::norm(b)};
}

double bloch_distance(const std::array<double, 3> &a, const std::array<double, 3> &b) {
    return std::hypot(a[0] - b[0], a[1] - b[1], a[2] - b[2]);
}

/// C split into d x d blocks B[a'][a] over the ancilla (qubit 0) indices.
struct BlockedClifford {
    Eigen::Index d;
    std::array<std::array<Small, 2>, 2> block;

    explicit BlockedClifford(const Matrix &c) : d(c.rows() / 2) {
        for (int ap = 0; ap < 2; ap++) {
            for (int a = 0; a < 2; a++) {
                Small b(d, d);
                for (Eigen::Index xp = 0; xp < d; xp++) {
                    for (Eigen::Index x = 0; x < d; x++) {
                        b(xp, x) = c(ap + 2 * xp, a + 2 * x);
                    }
                }
                block[ap][a] = b;
            }
        }
    }

    Small induced(const Complex m0, const Complex m1) const {
        const Complex m[2] = {m0, m1};
        Small out = Small::Zero(d, d);
        for (int ap = 0; ap < 2; ap++) {
            for (int a = 0; a < 2; a++) {
                out += std::conj(m[ap]) * m[a] * block[ap][a];
            }
        }
        return out;
    }

    Small defect(double theta, double phi) const {
        Small a = induced(std::cos(theta / 2), std::polar(std::sin(theta / 2), phi));
        Small g = a.adjoint() * a;
        g -= Small::Identity(d, d);
        return g;
    }

    double residual(double theta, double phi) const {
        return defect(theta, phi).norm();
    }
};

struct Point {
    double theta, phi;
};

std::vector<Point> fibonacci_grid(size_t n) {
    std::vector<Point> out;
    const double golden = std::numbers::pi * (3 - std::sqrt(5.0));
    for (size_t i = 0; i < n; i++) {
        double z = 1 - 2 * (static_cast<double>(i) + 0.5) / static_cast<double>(n);
        out.push_back({std::acos(z), std::fmod(golden * static_cast<double>(i), 2 * std::numbers::pi)});
    }
    return out;
}

std::array<double, 3> bloch_of(const Point &p) {
    return {std::sin(p.theta) * std::cos(p.phi), std::sin(p.theta) * std::sin(p.phi), std::cos(p.theta)};
}

struct Grid {
    std::vector<Point> points;
    std::vector<std::vector<size_t>> neighbors;
    double spacing;
};

const Grid &grid_for(size_t n) {
    static std::mutex mu;
    static std::map<size_t, Grid> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) {
        return it->second;
    }
    Grid g;
    g.points = fibonacci_grid(n);
    g.spacing = std::sqrt(4 * std::numbers::pi / static_cast<double>(n));
    g.neighbors.resize(n);
    std::vector<std::array<double, 3>> v;
    for (const auto &p : g.points) {
        v.push_back(bloch_of(p));
    }
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            if (i != j && bloch_distance(v[i], v[j]) < 2.5 * g.spacing) {
                g.neighbors[i].push_back(j);
            }
        }
    }
    return cache.emplace(n, std::move(g)).first->second;
}

Point nelder_mead(const BlockedClifford &c, Point start, double step, int iterations) {
    auto f = [&](const std::array<double, 2> &x) {
        double r = c.residual(x[0], x[1]);
        return r * r;
    };
    std::array<std::array<double, 2>, 3> s = {{{start.theta, start.phi},
                                               {start.theta + step, start.phi},
                                               {start.theta, start.phi + step}}};
    std::array<double, 3> fs = {f(s[0]), f(s[1]), f(s[2])};
    for (int it = 0; it < iterations; it++) {
        std::array<int, 3> idx = {0, 1, 2};
        std::sort(idx.begin(), idx.end(), [&](int a, int b) { return fs[a] < fs[b]; });
        auto best = s[idx[0]], mid = s[idx[1]], worst = s[idx[2]];
        double fb = fs[idx[0]], fm = fs[idx[1]], fw = fs[idx[2]];
        if (fb < 1e-30 || std::abs(worst[0] - best[0]) + std::abs(worst[1] - best[1]) < 1e-14) {
            break;
        }
        std::array<double, 2> cen = {(best[0] + mid[0]) / 2, (best[1] + mid[1]) / 2};
        auto along = [&](double t) -> std::array<double, 2> {
            return {cen[0] + t * (worst[0] - cen[0]), cen[1] + t * (worst[1] - cen[1])};
        };
        auto xr = along(-1);
        double fr = f(xr);
        if (fr < fb) {
            auto xe = along(-2);
            double fe = f(xe);
            s[idx[2]] = fe < fr ? xe : xr;
            fs[idx[2]] = std::min(fe, fr);
        } else if (fr < fm) {
            s[idx[2]] = xr;
            fs[idx[2]] = fr;
        } else {
            auto xc = fr < fw ? along(-0.5) : along(0.5);
            double fc = f(xc);
            if (fc < std::min(fr, fw)) {
                s[idx[2]] = xc;
                fs[idx[2]] = fc;
            } else {
                for (int k : {idx[1], idx[2]}) {
                    s[k] = {(s[k][0] + best[0]) / 2, (s[k][1] + best[1]) / 2};
                    fs[k] = f(s[k]);
                }
            }
        }
    }
    int b = static_cast<int>(std::min_element(fs.begin(), fs.end()) - fs.begin());
    return {s[b][0], s[b][1]};
}

/// Levenberg-Marquardt on the real and imaginary parts of A^dagger A - I.
Point polish(const BlockedClifford &c, Point p) {
    auto residuals = [&](double theta, double phi) {
        Small dft = c.defect(theta, phi);
        Eigen::VectorXd r(2 * dft.size());
        for (Eigen::Index k = 0; k < dft.size(); k++) {
            r[2 * k] = dft(k).real();
            r[2 * k + 1] = dft(k).imag();
        }
        return r;
    };
    Eigen::VectorXd r = residuals(p.theta, p.phi);
    double lambda = 1e-3;
    const double h = 1e-7;
    for (int it = 0; it < 100 && r.norm() > 1e-15; it++) {
        Eigen::MatrixXd jac(r.size(), 2);
        jac.col(0) = (residuals(p.theta + h, p.phi) - residuals(p.theta - h, p.phi)) / (2 * h);
        jac.col(1) = (residuals(p.theta, p.phi + h) - residuals(p.theta, p.phi - h)) / (2 * h);
        Eigen::Matrix2d jtj = jac.transpose() * jac;
        Eigen::Vector2d g = jac.transpose() * r;
        bool improved = false;
        while (lambda < 1e12) {
            Eigen::Matrix2d lhs = jtj;
            lhs.diagonal() += lambda * (jtj.diagonal().array() + 1e-12).matrix();
            Eigen::Vector2d step = lhs.ldlt().solve(-g);
            Eigen::VectorXd trial = residuals(p.theta + step[0], p.phi + step[1]);
            if (trial.norm() < r.norm()) {
                p = {p.theta + step[0], p.phi + step[1]};
                r = trial;
                lambda = std::max(lambda / 10, 1e-15);
                improved = true;
                break;
            }
            lambda *= 10;
        }
        if (!improved) {
            break;
        }
    }
    return p;
}

Matrix nearest_unitary(const Matrix &a) {
    Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    return svd.matrixU() * svd.matrixV().adjoint();
}

Solution make_solution(const Matrix &c, const Vector &m) {
    Matrix a = induced_map(c, m);
    Matrix u = nearest_unitary(a);
    return {m, bloch_of(m), u, reusability_residual(c, m), is_clifford_unitary(u, 1e-8)};
}

std::vector<CliffordGate> generators(size_t n) {
    std::vector<CliffordGate> out;
    for (uint32_t q = 0; q < n; q++) {
        out.push_back(CliffordGate::one(GateKind::H, q));
        out.push_back(CliffordGate::one(GateKind::S, q));
    }
    for (uint32_t a = 0; a < n; a++) {
        for (uint32_t b = 0; b < n; b++) {
            if (a != b) {
                out.push_back(CliffordGate::two(GateKind::CNOT, a, b));
            }
        }
    }
    return out;
}

}  // namespace

Circuit CliffordElement::witness_circuit() const {
    Circuit c{num_qubits, 0, {}};
    for (const auto &g : witness) {
        c.instructions.push_back(GateOp{g});
    }
    return c;
}

Matrix CliffordElement::unitary() const {
    return circuit_unitary(witness_circuit());
}

std::vector<PauliString> clifford_images(size_t num_qubits, std::span<const CliffordGate> gates) {
    std::vector<PauliString> images;
    for (size_t q = 0; q < num_qubits; q++) {
        images.push_back(PauliString::single(num_qubits, q, 'X'));
        images.push_back(PauliString::single(num_qubits, q, 'Z'));
    }
    for (const auto &g : gates) {
        for (auto &p : images) {
            conjugate_in_place(g, p);
        }
    }
    return images;
}

uint64_t canonical_id(std::span<const PauliString> images) {
    uint64_t id = 0;
    for (const auto &p : images) {
        for (size_t q = 0; q < p.num_qubits(); q++) {
            id = (id << 2) | (uint64_t{p.x(q)} << 1) | uint64_t{p.z(q)};
        }
        id = (id << 1) | uint64_t{p.negative()};
    }
    return id;
}

std::vector<CliffordElement> enumerate_group(size_t n) {
    if (n < 1 || n > 2) {
        throw std::invalid_argument("enumerate_group supports n = 1 or 2");
    }
    const auto gens = generators(n);
    std::vector<CliffordElement> out;
    std::unordered_map<uint64_t, size_t> seen;
    CliffordElement id{n, clifford_images(n, {}), 0, {}};
    id.canonical_id = canonical_id(id.images);
    seen[id.canonical_id] = 0;
    out.push_back(std::move(id));
    for (size_t head = 0; head < out.size(); head++) {
        for (const auto &g : gens) {
            std::vector<PauliString> images = out[head].images;
            for (auto &p : images) {
                conjugate_in_place(g, p);
            }
            uint64_t key = canonical_id(images);
            if (seen.count(key)) {
                continue;
            }
            std::vector<CliffordGate> witness = out[head].witness;
            witness.push_back(g);
            seen[key] = out.size();
            out.push_back({n, std::move(images), key, std::move(witness)});
        }
    }
    return out;
}

uint64_t clifford_group_order(size_t n) {
    uint64_t order = uint64_t{1} << (n * n + 2 * n);
    for (size_t j = 1; j <= n; j++) {
        order *= (uint64_t{1} << (2 * j)) - 1;
    }
    return order;
}

CliffordElement random_element(size_t n, std::mt19937_64 &rng, size_t word_length) {
    const auto gens = generators(n);
    CliffordElement e{n, {}, 0, {}};
    for (size_t k = 0; k < word_length; k++) {
        e.witness.push_back(gens[rng() % gens.size()]);
    }
    e.images = clifford_images(n, e.witness);
    e.canonical_id = canonical_id(e.images);
    return e;
}

Matrix induced_map(const Matrix &c, const Vector &m) {
    const Eigen::Index d = c.rows() / 2;
    Matrix out = Matrix::Zero(d, d);
    for (Eigen::Index xp = 0; xp < d; xp++) {
        for (Eigen::Index x = 0; x < d; x++) {
            Complex acc = 0;
            for (int ap = 0; ap < 2; ap++) {
                for (int a = 0; a < 2; a++) {
                    acc += std::conj(m[ap]) * m[a] * c(ap + 2 * xp, a + 2 * x);
                }
            }
            out(xp, x) = acc;
        }
    }
    return out;
}

double reusability_residual(const Matrix &c, const Vector &m) {
    Matrix a = induced_map(c, m);
    return (a.adjoint() * a - Matrix::Identity(a.rows(), a.cols())).norm();
}

SearchResult solve_reusable(const CliffordElement &element, const SolverOptions &options) {
    if (element.num_qubits < 2 || element.num_qubits > 3) {
        throw std::invalid_argument("solve_reusable needs one ancilla and one or two data qubits");
    }
    const Matrix c = element.unitary();
    const BlockedClifford blocked(c);
    const Grid &grid = grid_for(options.grid_points);
    SearchResult result;
    result.clifford_id = element.canonical_id;

    std::vector<double> f(grid.points.size());
    bool all_solve = true;
    for (size_t i = 0; i < grid.points.size(); i++) {
        f[i] = blocked.residual(grid.points[i].theta, grid.points[i].phi);
        all_solve = all_solve && f[i] <= kSolutionResidual;
    }
    if (all_solve) {
        result.family = FamilyKind::FullSphere;
        for (FrameLabel l : {FrameLabel::ZPlus, FrameLabel::ZMinus, FrameLabel::XPlus, FrameLabel::XMinus,
                             FrameLabel::YPlus, FrameLabel::YMinus}) {
            result.solutions.push_back(make_solution(c, frame_state(l)));
        }
        result.best_residual = *std::max_element(f.begin(), f.end());
        return result;
    }

    result.best_residual = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < grid.points.size(); i++) {
        bool local_min = std::all_of(grid.neighbors[i].begin(), grid.neighbors[i].end(),
                                     [&](size_t j) { return f[i] <= f[j]; });
        if (!local_min) {
            continue;
        }
        Point p = nelder_mead(blocked, grid.points[i], grid.spacing / 2, 200);
        p = polish(blocked, p);
        double r = blocked.residual(p.theta, p.phi);
        result.best_residual = std::min(result.best_residual, r);
        if (r > kSolutionResidual) {
            result.inconclusive = result.inconclusive || r < kNearSolution;
            continue;
        }
        Vector m = ancilla_from_angles(p.theta, p.phi);
        auto b = bloch_of(m);
        bool duplicate = std::any_of(result.solutions.begin(), result.solutions.end(),
                                     [&](const Solution &s) { return bloch_distance(s.bloch, b) <= kDedupDistance; });
        if (!duplicate) {
            result.solutions.push_back(make_solution(c, m));
        }
    }
    if (static_cast<double>(result.solutions.size()) > kFamilyThreshold) {
        result.family = FamilyKind::Continuous;
    }
    std::sort(result.solutions.begin(), result.solutions.end(),
              [](const Solution &a, const Solution &b) { return a.bloch < b.bloch; });
    return result;
}

std::string pauli_action(const Matrix &u) {
    const Eigen::Index d = u.rows();
    const size_t n = static_cast<size_t>(std::countr_zero(static_cast<size_t>(d)));
    std::string out;
    for (size_t q = 0; q < n; q++) {
        for (char letter : {'X', 'Z'}) {
            PauliString gen = PauliString::single(n, q, letter);
            Matrix image = u * pauli_matrix(gen) * u.adjoint();
            bool found = false;
            for (size_t code = 0; code < (size_t{1} << (2 * n)) && !found; code++) {
                PauliString p(n);
                for (size_t k = 0; k < n; k++) {
                    p.set_letter(k, "IXYZ"[(code >> (2 * k)) & 3]);
                }
                Complex ov = (pauli_matrix(p).adjoint() * image).trace() / static_cast<double>(d);
                for (int sign : {1, -1}) {
                    if (std::abs(ov - static_cast<double>(sign)) < 1e-8) {
                        p.set_phase(sign > 0 ? 0 : 2);
                        if (!out.empty()) {
                            out += ",";
                        }
                        std::string g = gen.str().substr(1);
                        out += g + "->" + p.str();
                        found = true;
                    }
                }
            }
            if (!found) {
                return "";
            }
        }
    }
    return out;
}

SurveyReport survey(size_t n, const std::function<void(size_t, size_t)> &progress) {
    SurveyReport report;
    report.num_qubits = n;
    auto group = enumerate_group(n);
    report.group_size = group.size();
    if (n == 1) {
        for (const auto &e : group) {
            Matrix u = e.unitary();
            std::string action = pauli_action(u);
            report.solved++;
            if (action.empty()) {
                report.non_clifford_count++;
                report.induced["non-clifford"]++;
            } else {
                report.clifford_count++;
                report.induced[action]++;
            }
        }
        return report;
    }
    const std::string s_action = pauli_action(gate_matrix(GateKind::S));
    const std::string sdg_action = pauli_action(gate_matrix(GateKind::S_DAG));
    for (size_t i = 0; i < group.size(); i++) {
        SearchResult r = solve_reusable(group[i]);
        if (r.inconclusive) {
            report.inconclusive.push_back(r.clifford_id);
        }
        if (!r.solutions.empty()) {
            report.solved++;
        }
        if (r.family != FamilyKind::None) {
            report.families.emplace_back(r.clifford_id, r.family);
        }
        for (const auto &s : r.solutions) {
            if (!s.clifford) {
                report.non_clifford_count++;
                report.induced["non-clifford"]++;
                continue;
            }
            report.clifford_count++;
            std::string action = pauli_action(s.unitary);
            report.induced[action]++;
            if (r.family == FamilyKind::None && (action == s_action || action == sdg_action)) {
                report.has_s_type = true;
            }
        }
        if (progress) {
            progress(i + 1, group.size());
        }
    }
    return report;
}

std::string family_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::None:
            return "none";
        case FamilyKind::FullSphere:
            return "full_sphere";
        case FamilyKind::Continuous:
            return "continuous";
    }
    return "none";
}

nlohmann::json to_json(const SearchResult &r) {
    nlohmann::json sols = nlohmann::json::array();
    for (const auto &s : r.solutions) {
        sols.push_back({
            {"bloch", s.bloch},
            {"residual", s.residual},
            {"classification", s.clifford ? "clifford" : "non_clifford"},
            {"induced", s.clifford ? pauli_action(s.unitary) : std::string()},
            {"representative", r.family != FamilyKind::None},
        });
    }
    return {{"clifford_id", r.clifford_id},
            {"family", family_name(r.family)},
            {"inconclusive", r.inconclusive},
            {"solutions", sols}};
}

nlohmann::json to_json(const SurveyReport &r) {
    nlohmann::json fams = nlohmann::json::array();
    for (const auto &[id, kind] : r.families) {
        fams.push_back({{"clifford_id", id}, {"kind", family_name(kind)}});
    }
    nlohmann::json induced = nlohmann::json::object();
    for (const auto &[action, count] : r.induced) {
        induced[action] = count;
    }
    return {{"num_qubits", r.num_qubits},
            {"group_size", r.group_size},
            {"solved", r.solved},
            {"inconclusive", r.inconclusive},
            {"non_clifford_count", r.non_clifford_count},
            {"clifford_count", r.clifford_count},
            {"families", fams},
            {"induced_unitaries", induced},
            {"has_s_type", r.has_s_type}};
}

nlohmann::json group_to_json(const std::vector<CliffordElement> &elements) {
    nlohmann::json out = nlohmann::json::object();
    for (const auto &e : elements) {
        nlohmann::json images = nlohmann::json::array();
        for (const auto &p : e.images) {
            images.push_back(p.str());
        }
        std::string witness;
        for (const auto &g : e.witness) {
            witness += std::string(gate_mnemonic(g.kind));
            for (size_t t = 0; t < g.arity(); t++) {
                witness += " " + std::to_string(g.targets[t]);
            }
            witness += ";";
        }
        out[std::to_string(e.canonical_id)] = {{"images", images}, {"witness", witness}};
    }
    return out;
}

}  // namespace stabmagic
