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

// stabmagic command-line front end.
//
// Exit codes: 0 success, 1 validation error (bad flags, bad input files,
// failed gadget verification), 2 internal error.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "stabmagic/bench.h"
#include "stabmagic/expand.h"
#include "stabmagic/gadget_lib.h"
#include "stabmagic/gadget_search.h"
#include "stabmagic/json_io.h"
#include "stabmagic/magic_decomp.h"
#include "stabmagic/stabsum.h"

namespace {

using namespace stabmagic;
using nlohmann::json;

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string circuit_path;
    std::string state_path;
    std::string gadget;
    std::vector<std::string> gadget_files;
    std::string format = "text";
    uint64_t seed = 0;
    int64_t shots = 1;
    size_t max_measurements = 16;
    size_t search_qubits = 2;
    std::string cache_path;
    std::vector<size_t> sizes = {64, 128, 256, 512};
    size_t repeats = 15;
};

uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

uint64_t shot_seed(uint64_t seed, uint64_t shot) {
    return splitmix64(seed ^ splitmix64(shot));
}

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot read '" + path + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json read_json(const std::string &path) {
    try {
        return json::parse(read_file(path));
    } catch (const json::parse_error &e) {
        throw ValidationError("'" + path + "' is not valid JSON: " + e.what());
    }
}

GadgetLibrary load_library(const Options &o) {
    GadgetLibrary lib = GadgetLibrary::builtins();
    for (const auto &path : o.gadget_files) {
        lib.add(gadget_from_json(read_json(path)));
    }
    return lib;
}

json envelope(const std::string &command, const Options &o) {
    return {{"schema", 1}, {"command", command}, {"seed", o.seed}};
}

void emit(const json &j) {
    std::cout << j.dump(2) << "\n";
}

std::string fmt(double v) {
    std::ostringstream ss;
    ss << std::setprecision(12) << v;
    return ss.str();
}

struct Prepared {
    ExpandedCircuit expanded;
    StabMixture mixture;
};

Prepared prepare(const Options &o) {
    Circuit c = parse_circuit(read_file(o.circuit_path));
    if (auto diags = validate(c); !diags.empty()) {
        throw ValidationError("instruction " + std::to_string(diags.front().instruction) + ": " +
                              diags.front().message);
    }
    GadgetLibrary lib = load_library(o);
    ExpandedCircuit e = expand_gadgets(c, lib);
    auto placement = e.placement();
    StabMixture m = StabMixture::init(e.circuit, e.ancilla_state(), placement);
    return {std::move(e), std::move(m)};
}

int cmd_run(const Options &o) {
    Prepared p = prepare(o);
    Distribution d = exact_distribution(p.mixture, p.expanded.circuit, o.max_measurements);
    if (o.format == "json") {
        json j = envelope("run", o);
        j["circuit"] = o.circuit_path;
        j["qubits"] = p.expanded.circuit.num_qubits;
        j["bits"] = p.expanded.circuit.num_bits;
        j["terms"] = p.mixture.initial_term_count();
        j["ancillas"] = ancilla_map_to_json(p.expanded);
        j["distribution"] = distribution_to_json(d);
        emit(j);
    } else {
        std::cout << "# qubits " << p.expanded.circuit.num_qubits << ", bits " << p.expanded.circuit.num_bits
                  << ", terms " << p.mixture.initial_term_count() << ", seed " << o.seed << "\n";
        for (const auto &[key, prob] : d) {
            std::cout << (key.empty() ? "-" : key) << " " << fmt(prob) << "\n";
        }
    }
    return 0;
}

int cmd_sample(const Options &o) {
    if (o.shots <= 0) {
        throw ValidationError("--shots must be positive");
    }
    Prepared p = prepare(o);
    std::map<std::string, uint64_t> counts;
    for (int64_t s = 0; s < o.shots; s++) {
        OutcomeRecord r = run_sample(p.mixture, p.expanded.circuit, shot_seed(o.seed, static_cast<uint64_t>(s)));
        std::string key;
        for (uint8_t b : r) {
            key += b ? '1' : '0';
        }
        counts[key]++;
    }
    if (o.format == "json") {
        json j = envelope("sample", o);
        j["circuit"] = o.circuit_path;
        j["shots"] = o.shots;
        j["terms"] = p.mixture.initial_term_count();
        j["counts"] = counts;
        emit(j);
    } else {
        std::cout << "# shots " << o.shots << ", seed " << o.seed << "\n";
        for (const auto &[key, n] : counts) {
            std::cout << (key.empty() ? "-" : key) << " " << n << "\n";
        }
    }
    return 0;
}

int cmd_verify(const Options &o) {
    if (o.gadget.empty()) {
        throw ValidationError("verify-gadget needs a gadget name or file");
    }
    GadgetLibrary lib = load_library(o);
    std::optional<GadgetDef> file_gadget;
    if (!lib.find(o.gadget) && std::filesystem::exists(o.gadget)) {
        file_gadget = gadget_from_json(read_json(o.gadget));
    }
    const GadgetDef &g = file_gadget ? *file_gadget : lib.get(o.gadget);
    VerifyOptions vo;
    vo.seed = o.seed;
    VerifyReport r = verify_gadget(g, vo);
    if (o.format == "json") {
        json j = envelope("verify-gadget", o);
        j["report"] = report_to_json(r);
        emit(j);
    } else {
        std::cout << "gadget            " << r.name << (r.reusable ? " (reusable)" : " (consumable)") << "\n"
                  << "unitary_match     " << fmt(r.unitary_match) << "\n"
                  << "process_fidelity  " << fmt(r.process_fidelity) << "\n"
                  << "ancilla_restored  " << (r.ancilla_restored ? fmt(*r.ancilla_restored) : "n/a") << "\n"
                  << "leakage           " << fmt(r.leakage) << "\n"
                  << "uses_target_gate  " << (r.uses_target_gate ? "yes" : "no") << "\n";
        for (const auto &[key, f] : r.branch_fidelity) {
            std::cout << "branch " << (key.empty() ? "-" : key) << " fidelity " << fmt(f) << "\n";
        }
        std::cout << (r.passed ? "PASSED" : "FAILED") << "\n";
        for (const auto &f : r.failures) {
            std::cout << "  " << f << "\n";
        }
    }
    return r.passed ? 0 : 1;
}

int cmd_search(const Options &o) {
    if (o.search_qubits != 1 && o.search_qubits != 2) {
        throw ValidationError("--qubits must be 1 or 2");
    }
    if (!o.cache_path.empty()) {
        std::ofstream out(o.cache_path);
        if (!out) {
            throw ValidationError("cannot write '" + o.cache_path + "'");
        }
        out << group_to_json(enumerate_group(o.search_qubits)).dump() << "\n";
    }
    SurveyReport r = survey(o.search_qubits);
    if (o.format == "json") {
        json j = envelope("search", o);
        j["survey"] = to_json(r);
        emit(j);
    } else {
        std::cout << "group_size          " << r.group_size << "\n"
                  << "solved              " << r.solved << "\n"
                  << "inconclusive        " << r.inconclusive.size() << "\n"
                  << "families            " << r.families.size() << "\n"
                  << "clifford solutions  " << r.clifford_count << "\n"
                  << "non_clifford_count  " << r.non_clifford_count << "\n"
                  << "s_type_present      " << (r.has_s_type ? "yes" : "no") << "\n"
                  << "distinct induced    " << r.induced.size() << "\n";
    }
    return 0;
}

int cmd_decompose(const Options &o) {
    DensityMatrix rho = density_from_json(read_json(o.state_path));
    PauliDecomposition d = pauli_coefficients(rho);
    StabFrameDecomposition f = stabilizer_frame(d);
    if (o.format == "json") {
        json j = envelope("decompose", o);
        j["pauli"] = to_json(d);
        j["frame"] = to_json(f);
        j["terms"] = f.terms.size();
        j["weight_sum"] = f.weight_sum();
        emit(j);
    } else {
        std::cout << "# pauli coefficients\n";
        for (size_t code = 0; code < d.coefficients.size(); code++) {
            std::cout << PauliDecomposition::pauli_for_code(d.num_qubits, code).str() << " "
                      << fmt(d.coefficients[code]) << "\n";
        }
        std::cout << "# stabilizer frame (" << f.terms.size() << " terms)\n";
        for (const auto &t : f.terms) {
            for (FrameLabel l : t.labels) {
                std::cout << frame_label_name(l) << " ";
            }
            std::cout << fmt(t.weight) << "\n";
        }
    }
    return 0;
}

int cmd_bench(const Options &o) {
    BenchOptions bo;
    bo.sizes = o.sizes;
    bo.repeats = o.repeats;
    bo.seed = o.seed;
    BenchReport r = run_bench(bo);
    if (o.format == "json") {
        json j = envelope("bench", o);
        j["bench"] = to_json(r);
        emit(j);
    } else {
        std::cout << "qubits  gates  terms  seconds\n";
        for (const auto &p : r.by_qubits) {
            std::cout << p.qubits << "  " << p.gates << "  " << p.terms << "  " << fmt(p.seconds) << "\n";
        }
        std::cout << "log-log slope " << fmt(r.loglog_slope) << "\n\nterms  seconds  seconds/term\n";
        for (const auto &p : r.by_terms) {
            std::cout << p.terms << "  " << fmt(p.seconds) << "  " << fmt(p.seconds / static_cast<double>(p.terms))
                      << "\n";
        }
        std::cout << "max deviation from linear " << fmt(r.term_linearity_deviation) << "\n";
    }
    return 0;
}

void add_format(CLI::App *cmd, Options &o) {
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

void add_seed(CLI::App *cmd, Options &o) {
    cmd->add_option("--seed", o.seed, "RNG seed (reported in the output)");
}

}  // namespace

int main(int argc, char **argv) {
    Options o;
    CLI::App app{"stabmagic: stabilizer simulation with magic-state gadgets"};
    app.require_subcommand(1);

    auto *run = app.add_subcommand("run", "Exact outcome distribution of a circuit");
    run->add_option("circuit", o.circuit_path, "Circuit file")->required();
    run->add_option("--gadget", o.gadget_files, "Extra gadget definition file (repeatable)");
    run->add_option("--max-measurements", o.max_measurements, "Branch-enumeration measurement cap");
    add_format(run, o);
    add_seed(run, o);

    auto *sample = app.add_subcommand("sample", "Sample measurement records");
    sample->add_option("circuit", o.circuit_path, "Circuit file")->required();
    sample->add_option("--shots", o.shots, "Number of shots");
    sample->add_option("--gadget", o.gadget_files, "Extra gadget definition file (repeatable)");
    add_format(sample, o);
    add_seed(sample, o);

    auto *verify = app.add_subcommand("verify-gadget", "Verify a gadget with the dense oracle");
    verify->add_option("name", o.gadget, "Gadget name or JSON file");
    verify->add_option("--gadget", o.gadget, "Gadget name or JSON file");
    add_format(verify, o);
    add_seed(verify, o);

    auto *search = app.add_subcommand("search", "Survey the Clifford group for reusable magic states");
    search->add_option("--qubits", o.search_qubits, "Body width: 1 (no ancilla) or 2 (ancilla + data)");
    search->add_option("--cache", o.cache_path, "Write the enumerated group to this file");
    add_format(search, o);
    add_seed(search, o);

    auto *decompose = app.add_subcommand("decompose", "Pauli and stabilizer-frame decomposition of a state");
    decompose->add_option("state", o.state_path, "State file (JSON vector or matrix)")->required();
    add_format(decompose, o);
    add_seed(decompose, o);

    auto *bench = app.add_subcommand("bench", "Scaling benchmark of the mixture simulator");
    bench->add_option("--sizes", o.sizes, "Qubit counts for the size sweep")->delimiter(',');
    bench->add_option("--repeats", o.repeats, "Timing repeats (minimum is reported)");
    add_format(bench, o);
    add_seed(bench, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*run) return cmd_run(o);
        if (*sample) return cmd_sample(o);
        if (*verify) return cmd_verify(o);
        if (*search) return cmd_search(o);
        if (*decompose) return cmd_decompose(o);
        if (*bench) return cmd_bench(o);
    } catch (const ValidationError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const stabmagic::ParseError &e) {
        std::cerr << "error: " << o.circuit_path << ": " << e.what() << "\n";
        return 1;
    } catch (const InvalidMixtureState &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::length_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::out_of_range &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const nlohmann::json::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
