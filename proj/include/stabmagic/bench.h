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

#ifndef STABMAGIC_BENCH_H
#define STABMAGIC_BENCH_H

// Wall-time scaling of run_sample: against qubit count at a fixed one-qubit
// |pi/4> ancilla, and against term count at a fixed qubit count.

#include <cstdint>
#include <vector>

#include "json.hpp"
#include "stabmagic/circuit.h"

namespace stabmagic {

struct BenchOptions {
    std::vector<size_t> sizes = {64, 128, 256, 512};
    size_t gates_per_qubit = 4;
    size_t measurements = 8;
    size_t term_qubits = 128;
    /// |pi/4> ancilla widths for the term-count sweep (6^k terms).
    std::vector<size_t> ancilla_widths = {1, 2, 3};
    size_t repeats = 15;
    uint64_t seed = 7;
};

struct BenchPoint {
    size_t qubits;
    size_t terms;
    size_t gates;
    double seconds;
};

struct BenchReport {
    std::vector<BenchPoint> by_qubits;
    /// Least-squares slope of log(time) against log(n).
    double loglog_slope = 0;
    /// Term sweep over a measurement-free circuit, so the live term count
    /// equals the initial count throughout.
    std::vector<BenchPoint> by_terms;
    /// Max relative deviation of time from the best fit through the origin
    /// of time against term count.
    double term_linearity_deviation = 0;
};

/// Random Clifford circuit on `data` qubits followed by `ancilla` qubits,
/// `gates` random gates, and `measurements` measurements of data qubits spread
/// through the circuit.
Circuit bench_circuit(size_t data, size_t ancilla, size_t gates, size_t measurements, uint64_t seed);

/// Minimum over repeats of the wall time of init + run_sample.
double time_run_sample(const Circuit &c, size_t ancilla_width, size_t repeats, uint64_t seed);

BenchReport run_bench(const BenchOptions &options);

nlohmann::json to_json(const BenchReport &r);

}  // namespace stabmagic

#endif
