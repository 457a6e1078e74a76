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

#include "stabmagic/bench.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "stabmagic/stabsum.h"

namespace stabmagic {

namespace {

DensityMatrix pi4_power(size_t k) {
    Vector v(2);
    v << 1 / std::numbers::sqrt2, std::polar(1 / std::numbers::sqrt2, std::numbers::pi / 4);
    Matrix one = v * v.adjoint();
    Matrix rho = Matrix::Ones(1, 1);
    for (size_t j = 0; j < k; j++) {
        rho = kron(one, rho);
    }
    return DensityMatrix(std::move(rho));
}

}  // namespace

Circuit bench_circuit(size_t data, size_t ancilla, size_t gates, size_t measurements, uint64_t seed) {
    const size_t n = data + ancilla;
    std::mt19937_64 rng(seed);
    Circuit c{n, 0, {}};
    const size_t stride = !measurements ? gates + 1 : std::max<size_t>(1, gates / measurements);
    static constexpr GateKind kOne[] = {GateKind::H, GateKind::S, GateKind::SQRT_X};
    for (size_t g = 0; g < gates; g++) {
        auto a = static_cast<uint32_t>(rng() % n);
        if (rng() % 2) {
            c.instructions.push_back(GateOp{CliffordGate::one(kOne[rng() % 3], a)});
        } else {
            auto b = static_cast<uint32_t>((a + 1 + rng() % (n - 1)) % n);
            c.instructions.push_back(GateOp{CliffordGate::two(GateKind::CNOT, a, b)});
        }
        if ((g + 1) % stride == 0 && c.num_bits < measurements) {
            auto q = static_cast<uint32_t>(rng() % data);
            c.instructions.push_back(MeasureOp{q, static_cast<uint32_t>(c.num_bits++)});
        }
    }
    return c;
}

double time_run_sample(const Circuit &c, size_t ancilla_width, size_t repeats, uint64_t seed) {
    std::vector<uint32_t> placement;
    for (size_t k = 0; k < ancilla_width; k++) {
        placement.push_back(static_cast<uint32_t>(c.num_qubits - ancilla_width + k));
    }
    const DensityMatrix rho = pi4_power(ancilla_width);
    double best = std::numeric_limits<double>::infinity();
    for (size_t r = 0; r < std::max<size_t>(1, repeats); r++) {
        auto start = std::chrono::steady_clock::now();
        auto m = StabMixture::init(c, rho, placement);
        auto record = run_sample(std::move(m), c, seed + r);
        auto stop = std::chrono::steady_clock::now();
        (void)record;
        best = std::min(best, std::chrono::duration<double>(stop - start).count());
    }
    return best;
}

BenchReport run_bench(const BenchOptions &options) {
    BenchReport report;
    for (size_t n : options.sizes) {
        size_t gates = options.gates_per_qubit * n;
        Circuit c = bench_circuit(n, 1, gates, options.measurements, options.seed + n);
        double t = time_run_sample(c, 1, options.repeats, options.seed);
        report.by_qubits.push_back({n, 6, gates, t});
    }
    if (report.by_qubits.size() >= 2) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        const auto k = static_cast<double>(report.by_qubits.size());
        for (const auto &p : report.by_qubits) {
            double x = std::log(static_cast<double>(p.qubits)), y = std::log(p.seconds);
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        report.loglog_slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
    }

    const size_t n = options.term_qubits;
    // No measurements, so no term is ever pruned and the live count stays at 6^k.
    Circuit base = bench_circuit(n, 3, options.gates_per_qubit * n, 0, options.seed);
    // Each sample does equal total work (smaller widths run proportionally more
    // often) and repeats are interleaved across widths, so scheduler noise
    // lands evenly on every point.
    const size_t widest = *std::max_element(options.ancilla_widths.begin(), options.ancilla_widths.end());
    std::vector<double> best(options.ancilla_widths.size(), std::numeric_limits<double>::infinity());
    for (size_t r = 0; r < std::max<size_t>(1, options.repeats); r++) {
        for (size_t k = 0; k < best.size(); k++) {
            auto runs = static_cast<size_t>(std::pow(6, widest - options.ancilla_widths[k]));
            auto start = std::chrono::steady_clock::now();
            for (size_t j = 0; j < runs; j++) {
                time_run_sample(base, options.ancilla_widths[k], 1, options.seed + r + j);
            }
            double t = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            best[k] = std::min(best[k], t / static_cast<double>(runs));
        }
    }
    for (size_t k = 0; k < best.size(); k++) {
        auto terms = static_cast<size_t>(std::pow(6, options.ancilla_widths[k]));
        report.by_terms.push_back({n + 3, terms, base.instructions.size(), best[k]});
    }
    double num = 0, den = 0;
    for (const auto &p : report.by_terms) {
        num += static_cast<double>(p.terms) * p.seconds;
        den += static_cast<double>(p.terms) * static_cast<double>(p.terms);
    }
    if (den > 0) {
        double slope = num / den;
        for (const auto &p : report.by_terms) {
            double fit = slope * static_cast<double>(p.terms);
            report.term_linearity_deviation = std::max(report.term_linearity_deviation, std::abs(p.seconds - fit) / fit);
        }
    }
    return report;
}

nlohmann::json to_json(const BenchReport &r) {
    auto points = [](const std::vector<BenchPoint> &ps) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto &p : ps) {
            out.push_back({{"qubits", p.qubits}, {"terms", p.terms}, {"gates", p.gates}, {"seconds", p.seconds}});
        }
        return out;
    };
    return {{"by_qubits", points(r.by_qubits)},
            {"loglog_slope", r.loglog_slope},
            {"by_terms", points(r.by_terms)},
            {"term_linearity_deviation", r.term_linearity_deviation}};
}

}  // namespace stabmagic
