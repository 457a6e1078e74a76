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

#include "stabmagic/circuit.h"

#include <algorithm>
#include <charconv>
#include <optional>
#include <span>
#include <sstream>

#include "overloaded.h"

namespace stabmagic {

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
    std::vector<std::string_view> out;
    size_t k = 0;
    while (k < line.size()) {
        while (k < line.size() && (line[k] == ' ' || line[k] == '\t' || line[k] == '\r')) {
            k++;
        }
        size_t start = k;
        while (k < line.size() && line[k] != ' ' && line[k] != '\t' && line[k] != '\r') {
            k++;
        }
        if (k > start) {
            out.push_back(line.substr(start, k - start));
        }
    }
    return out;
}

std::optional<uint32_t> parse_uint(std::string_view s) {
    uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        return std::nullopt;
    }
    return value;
}

class LineParser {
   public:
    explicit LineParser(std::string_view text) : text_(text) {
    }

    Circuit run() {
        size_t line_no = 0;
        size_t pos = 0;
        while (pos <= text_.size()) {
            size_t end = text_.find('\n', pos);
            if (end == std::string_view::npos) {
                end = text_.size();
            }
            line_no++;
            std::string_view line = text_.substr(pos, end - pos);
            if (auto hash = line.find('#'); hash != std::string_view::npos) {
                line = line.substr(0, hash);
            }
            line_ = line_no;
            auto words = split_words(line);
            if (!words.empty()) {
                handle(words);
            }
            pos = end + 1;
        }
        if (!have_qubits_) {
            throw ParseError(line_no, "missing 'qubits' declaration");
        }
        if (!have_bits_) {
            circuit_.num_bits = max_bit_plus_one_;
        }
        return std::move(circuit_);
    }

   private:
    [[noreturn]] void fail(const std::string &message) const {
        throw ParseError(line_, message);
    }

    uint32_t number(std::string_view w, const char *what) const {
        auto v = parse_uint(w);
        if (!v) {
            fail(std::string("expected ") + what + ", got '" + std::string(w) + "'");
        }
        return *v;
    }

    uint32_t qubit(std::string_view w) const {
        uint32_t q = number(w, "qubit index");
        if (q >= circuit_.num_qubits) {
            fail("qubit index " + std::to_string(q) + " out of range (qubits " + std::to_string(circuit_.num_qubits) +
                 ")");
        }
        return q;
    }

    uint32_t bit(std::string_view w) const {
        if (w.size() < 2 || w[0] != 'c') {
            fail("expected classical bit 'cK', got '" + std::string(w) + "'");
        }
        uint32_t b = number(w.substr(1), "bit index");
        if (have_bits_ && b >= circuit_.num_bits) {
            fail("bit c" + std::to_string(b) + " out of range (bits " + std::to_string(circuit_.num_bits) + ")");
        }
        return b;
    }

    CliffordGate gate(std::span<const std::string_view> words) const {
        auto kind = gate_from_mnemonic(words[0]);
        if (!kind) {
            fail("unknown mnemonic '" + std::string(words[0]) + "'");
        }
        size_t arity = gate_arity(*kind);
        if (words.size() != arity + 1) {
            fail(std::string(words[0]) + " takes " + std::to_string(arity) + " target(s), got " +
                 std::to_string(words.size() - 1));
        }
        if (arity == 1) {
            return CliffordGate::one(*kind, qubit(words[1]));
        }
        uint32_t a = qubit(words[1]);
        uint32_t b = qubit(words[2]);
        if (a == b) {
            fail(std::string(words[0]) + " targets must be distinct");
        }
        return CliffordGate::two(*kind, a, b);
    }

    void require_qubits() const {
        if (!have_qubits_) {
            fail("instruction before 'qubits' declaration");
        }
    }

    void handle(const std::vector<std::string_view> &w) {
        std::string_view head = w[0];
        if (head == "qubits") {
            if (have_qubits_) {
                fail("duplicate 'qubits' declaration");
            }
            if (w.size() != 2) {
                fail("usage: qubits N");
            }
            circuit_.num_qubits = number(w[1], "qubit count");
            if (circuit_.num_qubits == 0) {
                fail("qubit count must be positive");
            }
            have_qubits_ = true;
            return;
        }
        if (head == "bits") {
            if (have_bits_ || !circuit_.instructions.empty()) {
                fail("'bits' must appear once, before instructions");
            }
            if (w.size() != 2) {
                fail("usage: bits N");
            }
            circuit_.num_bits = number(w[1], "bit count");
            have_bits_ = true;
            return;
        }
        require_qubits();
        if (head == "T") {
            if (w.size() != 2) {
                fail("T takes 1 target");
            }
            circuit_.instructions.push_back(NonCliffordOp{"T", {qubit(w[1])}});
            return;
        }
        if (head == "GADGET") {
            if (w.size() < 3) {
                fail("usage: GADGET name q...");
            }
            NonCliffordOp op{std::string(w[1]), {}};
            for (size_t k = 2; k < w.size(); k++) {
                uint32_t q = qubit(w[k]);
                for (uint32_t prev : op.targets) {
                    if (prev == q) {
                        fail("GADGET targets must be distinct");
                    }
                }
                op.targets.push_back(q);
            }
            circuit_.instructions.push_back(std::move(op));
            return;
        }
        if (head == "M") {
            if (w.size() != 4 || w[2] != "->") {
                fail("usage: M q -> cK");
            }
            uint32_t q = qubit(w[1]);
            uint32_t b = bit(w[3]);
            if (written_.size() <= b) {
                written_.resize(b + 1, false);
            }
            if (written_[b]) {
                fail("bit c" + std::to_string(b) + " already written");
            }
            written_[b] = true;
            max_bit_plus_one_ = std::max<size_t>(max_bit_plus_one_, b + 1);
            circuit_.instructions.push_back(MeasureOp{q, b});
            return;
        }
        if (head == "IF") {
            if (w.size() < 3) {
                fail("usage: IF cK GATE q...");
            }
            uint32_t b = bit(w[1]);
            if (b >= written_.size() || !written_[b]) {
                fail("conditional reads bit c" + std::to_string(b) + " before it is written");
            }
            std::vector<std::string_view> rest(w.begin() + 2, w.end());
            circuit_.instructions.push_back(ConditionalOp{b, gate(rest)});
            return;
        }
        if (head == "RESET") {
            if (w.size() != 2) {
                fail("RESET takes 1 target");
            }
            circuit_.instructions.push_back(ResetOp{qubit(w[1])});
            return;
        }
        circuit_.instructions.push_back(GateOp{gate(w)});
    }

    std::string_view text_;
    size_t line_ = 0;
    Circuit circuit_;
    bool have_qubits_ = false;
    bool have_bits_ = false;
    size_t max_bit_plus_one_ = 0;
    std::vector<bool> written_;
};

void render_gate(std::ostream &out, const CliffordGate &g) {
    out << gate_mnemonic(g.kind) << ' ' << g.targets[0];
    if (g.arity() == 2) {
        out << ' ' << g.targets[1];
    }
}

}  // namespace

ParseError::ParseError(size_t line, const std::string &message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line(line) {
}

size_t Circuit::count_measurements() const {
    size_t total = 0;
    for (const auto &inst : instructions) {
        total += std::holds_alternative<MeasureOp>(inst) || std::holds_alternative<ResetOp>(inst);
    }
    return total;
}

bool Circuit::has_non_clifford() const {
    for (const auto &inst : instructions) {
        if (std::holds_alternative<NonCliffordOp>(inst)) {
            return true;
        }
    }
    return false;
}

Circuit parse_circuit(std::string_view text) {
    return LineParser(text).run();
}

std::string render_circuit(const Circuit &c) {
    std::ostringstream out;
    out << "qubits " << c.num_qubits << '\n';
    if (c.num_bits > 0) {
        out << "bits " << c.num_bits << '\n';
    }
    for (const auto &inst : c.instructions) {
        std::visit(overloaded{
                       [&](const GateOp &op) { render_gate(out, op.gate); },
                       [&](const NonCliffordOp &op) {
                           if (op.name == "T" && op.targets.size() == 1) {
                               out << "T " << op.targets[0];
                           } else {
                               out << "GADGET " << op.name;
                               for (uint32_t q : op.targets) {
                                   out << ' ' << q;
                               }
                           }
                       },
                       [&](const MeasureOp &op) { out << "M " << op.qubit << " -> c" << op.bit; },
                       [&](const ConditionalOp &op) {
                           out << "IF c" << op.bit << ' ';
                           render_gate(out, op.gate);
                       },
                       [&](const ResetOp &op) { out << "RESET " << op.qubit; },
                   },
                   inst);
        out << '\n';
    }
    return out.str();
}

std::vector<Diagnostic> validate(const Circuit &c) {
    std::vector<Diagnostic> diags;
    if (c.num_qubits == 0) {
        diags.push_back({0, "circuit has no qubits"});
    }
    std::vector<bool> written(c.num_bits, false);
    auto check_qubit = [&](size_t k, uint32_t q) {
        if (q >= c.num_qubits) {
            diags.push_back({k, "qubit " + std::to_string(q) + " out of range"});
        }
    };
    auto check_gate = [&](size_t k, const CliffordGate &g) {
        for (size_t t = 0; t < g.arity(); t++) {
            check_qubit(k, g.targets[t]);
        }
        if (g.arity() == 2 && g.targets[0] == g.targets[1]) {
            diags.push_back({k, std::string(gate_mnemonic(g.kind)) + " targets must be distinct"});
        }
    };
    for (size_t k = 0; k < c.instructions.size(); k++) {
        std::visit(overloaded{
                       [&](const GateOp &op) { check_gate(k, op.gate); },
                       [&](const NonCliffordOp &op) {
                           if (op.targets.empty()) {
                               diags.push_back({k, "non-Clifford '" + op.name + "' has no targets"});
                           }
                           for (uint32_t q : op.targets) {
                               check_qubit(k, q);
                           }
                       },
                       [&](const MeasureOp &op) {
                           check_qubit(k, op.qubit);
                           if (op.bit >= c.num_bits) {
                               diags.push_back({k, "bit c" + std::to_string(op.bit) + " out of range"});
                           } else if (written[op.bit]) {
                               diags.push_back({k, "bit c" + std::to_string(op.bit) + " written twice"});
                           } else {
                               written[op.bit] = true;
                           }
                       },
                       [&](const ConditionalOp &op) {
                           check_gate(k, op.gate);
                           if (op.bit >= c.num_bits || !written[op.bit]) {
                               diags.push_back(
                                   {k, "conditional reads bit c" + std::to_string(op.bit) + " before it is written"});
                           }
                       },
                       [&](const ResetOp &op) { check_qubit(k, op.qubit); },
                   },
                   c.instructions[k]);
    }
    return diags;
}

}  // namespace stabmagic
