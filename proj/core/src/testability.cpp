/*
 * Copyright (c) the revtest authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "revtest/testability.hpp"

#include <algorithm>
#include <unordered_set>
#include <utility>

namespace revtest {

GateKind make_trg(const GateKind& base) {
    if (base.arity() > 15) {
        throw Error("TRG base arity must be <= 15, got " + std::to_string(base.arity()));
    }
    if (!verify_bijective(base)) {
        throw Error("TRG base '" + base.name() + "' is not bijective");
    }
    return GateKind::trg_wrapper(base);
}

std::vector<unsigned> TestableBlock::block_lines() const {
    std::vector<unsigned> lines = data_lines;
    lines.push_back(parity_line);
    return lines;
}

GateInstance TestableBlock::trg_r() const {
    return {make_trg(base), block_lines()};
}

GateInstance TestableBlock::trg_s() const {
    return {make_trg(GateKind::identity(base.arity())), block_lines()};
}

TestableBlock make_tb(const GateKind& base, std::vector<unsigned> data_lines,
                      unsigned parity_line) {
    if (data_lines.size() != base.arity()) {
        throw Error("block over '" + base.name() + "' needs " + std::to_string(base.arity()) +
                    " data lines, got " + std::to_string(data_lines.size()));
    }
    std::unordered_set<unsigned> seen(data_lines.begin(), data_lines.end());
    if (seen.size() != data_lines.size() || seen.contains(parity_line)) {
        throw Error("block lines must be distinct");
    }
    if (!verify_bijective(base)) {
        throw Error("block base '" + base.name() + "' is not bijective");
    }
    return {base, std::move(data_lines), parity_line};
}

Circuit tb_circuit(const TestableBlock& block) {
    unsigned max_line = block.parity_line;
    for (unsigned line : block.data_lines) {
        max_line = std::max(max_line, line);
    }
    Circuit circuit(max_line + 1);
    circuit.set_constant(block.parity_line, false);
    circuit.add_gate(block.trg_r());
    circuit.add_gate(block.trg_s());
    return circuit;
}

std::vector<GateInstance> make_checker(const std::vector<unsigned>& parity_lines,
                                       const std::vector<unsigned>& constant_one_lines) {
    if (parity_lines.empty()) {
        throw Error("checker needs at least one parity line");
    }
    if (constant_one_lines.size() + 1 != parity_lines.size()) {
        throw Error("checker over " + std::to_string(parity_lines.size()) +
                    " parity lines needs " + std::to_string(parity_lines.size() - 1) +
                    " constant-1 lines, got " + std::to_string(constant_one_lines.size()));
    }
    const GateKind mfrg = GateKind::builtin("MFRG", 3);
    std::vector<GateInstance> gates;
    gates.reserve(constant_one_lines.size());
    // Left fold: with A carrying the running bit e and B tied to 1, the
    // MFRG's third output is ~A&C ^ A&B = e OR C.
    for (std::size_t i = 0; i + 1 < parity_lines.size(); ++i) {
        gates.push_back(
            {mfrg, {parity_lines[i], constant_one_lines[i], parity_lines[i + 1]}});
    }
    return gates;
}

Circuit checker_circuit(unsigned n) {
    if (n == 0) {
        throw Error("checker needs at least one parity line");
    }
    Circuit circuit(2 * n - 1);
    std::vector<unsigned> parity(n);
    std::vector<unsigned> ones(n - 1);
    for (unsigned i = 0; i < n; ++i) {
        parity[i] = i;
    }
    for (unsigned i = 0; i + 1 < n; ++i) {
        ones[i] = n + i;
        circuit.set_constant(n + i, true);
        circuit.set_garbage(n + i);
        circuit.set_garbage(i); // P output of checker gate i
    }
    for (const GateInstance& gate : make_checker(parity, ones)) {
        circuit.add_gate(gate);
    }
    return circuit;
}

std::vector<FaultSite> TestableCircuit::cut_points(std::size_t block) const {
    if (block >= blocks.size()) {
        throw Error("block index " + std::to_string(block) + " out of range");
    }
    std::vector<FaultSite> sites;
    sites.reserve(blocks[block].cut_wire_count());
    for (unsigned wire = 0; wire < blocks[block].cut_wire_count(); ++wire) {
        sites.push_back({block, wire});
    }
    return sites;
}

std::vector<FaultSite> TestableCircuit::all_fault_sites() const {
    std::vector<FaultSite> sites;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        for (unsigned wire = 0; wire < blocks[b].cut_wire_count(); ++wire) {
            sites.push_back({b, wire});
        }
    }
    return sites;
}

namespace {

// Fresh labels for the added lines, avoiding clashes with existing names.
std::vector<std::string> transformed_labels(const Circuit& original, std::size_t blocks) {
    std::vector<std::string> labels;
    std::unordered_set<std::string> used;
    for (unsigned i = 0; i < original.num_lines(); ++i) {
        labels.push_back(original.label(i));
        used.insert(labels.back());
    }
    auto fresh = [&used](std::string name) {
        while (used.contains(name)) {
            name.insert(name.begin(), '_');
        }
        used.insert(name);
        return name;
    };
    for (std::size_t i = 0; i < blocks; ++i) {
        labels.push_back(fresh("e" + std::to_string(i)));
    }
    for (std::size_t i = 0; i + 1 < blocks; ++i) {
        labels.push_back(fresh("k" + std::to_string(i)));
    }
    return labels;
}

} // namespace

TestableCircuit transform(const Circuit& input) {
    if (input.gate_count() == 0) {
        throw Error("cannot transform an empty circuit");
    }
    for (const GateInstance& gate : input.gates()) {
        if (!verify_bijective(gate.kind)) {
            throw Error("gate kind '" + gate.kind.name() + "' is not bijective");
        }
    }

    const unsigned d = input.num_lines();
    const std::size_t n = input.gate_count();
    const unsigned total = d + static_cast<unsigned>(2 * n - 1);

    Circuit circuit(total);
    circuit.set_labels(transformed_labels(input, n));
    for (const auto& [line, value] : input.constants()) {
        circuit.set_constant(line, value);
    }
    for (unsigned line : input.garbage()) {
        circuit.set_garbage(line);
    }

    TestableCircuit tc{std::move(circuit), input, {}, {}, 0};

    std::vector<unsigned> parity_lines;
    std::vector<unsigned> one_lines;
    for (std::size_t i = 0; i < n; ++i) {
        const unsigned parity = d + static_cast<unsigned>(i);
        parity_lines.push_back(parity);
        tc.circuit.set_constant(parity, false);
        const GateInstance& gate = input.gates()[i];
        TestableBlock block = make_tb(gate.kind, gate.lines, parity);
        tc.circuit.add_gate(block.trg_r());
        tc.circuit.add_gate(block.trg_s());
        tc.blocks.push_back(std::move(block));
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const unsigned one = d + static_cast<unsigned>(n + i);
        one_lines.push_back(one);
        tc.circuit.set_constant(one, true);
    }

    tc.checker_gates = make_checker(parity_lines, one_lines);
    for (const GateInstance& gate : tc.checker_gates) {
        tc.circuit.add_gate(gate);
    }

    // Garbage added by the construction: the checker consumes each parity
    // line except the last (its P outputs) and every constant-1 line (its
    // Q outputs); the last parity line carries E, a primary output.
    for (std::size_t i = 0; i + 1 < n; ++i) {
        tc.circuit.set_garbage(parity_lines[i]);
        tc.circuit.set_garbage(one_lines[i]);
    }
    tc.error_line = parity_lines.back();
    return tc;
}

Circuit expand(const TestableCircuit& tc) {
    Circuit circuit(tc.circuit.num_lines());
    circuit.set_labels(tc.circuit.labels());
    for (const auto& [line, value] : tc.circuit.constants()) {
        circuit.set_constant(line, value);
    }
    for (unsigned line : tc.circuit.garbage()) {
        circuit.set_garbage(line);
    }

    const GateKind feynman = GateKind::builtin("FEYNMAN", 2);
    for (const TestableBlock& block : tc.blocks) {
        circuit.add_gate(block.base, block.data_lines);
        for (int pass = 0; pass < 2; ++pass) {
            for (unsigned data : block.data_lines) {
                circuit.add_gate(feynman, {data, block.parity_line});
            }
        }
    }
    for (const GateInstance& gate : tc.checker_gates) {
        circuit.add_gate(gate);
    }
    return circuit;
}

RealDocument testable_to_document(const TestableCircuit& tc) {
    RealDocument doc = circuit_to_document(expand(tc));
    std::size_t gate_index = 0;
    for (std::size_t b = 0; b < tc.blocks.size(); ++b) {
        doc.marks.push_back({gate_index, RealMark::Kind::Block, b});
        gate_index += 1 + 2 * static_cast<std::size_t>(tc.blocks[b].arity());
    }
    if (!tc.checker_gates.empty()) {
        doc.marks.push_back({gate_index, RealMark::Kind::Checker, 0});
    }
    return doc;
}

std::string emit_real(const TestableCircuit& tc) {
    return emit_real_document(testable_to_document(tc));
}

TestableCircuit reconstruct_testable(const RealDocument& doc) {
    if (doc.marks.empty()) {
        throw Error("document carries no testable-block provenance marks");
    }
    const Circuit full = document_to_circuit(doc);
    const std::vector<GateInstance>& gates = full.gates();

    std::vector<RealMark> block_marks;
    std::optional<std::size_t> checker_start;
    for (const RealMark& mark : doc.marks) {
        if (mark.kind == RealMark::Kind::Block) {
            block_marks.push_back(mark);
        } else if (checker_start) {
            throw Error("duplicate # checker mark");
        } else {
            checker_start = mark.gate_index;
        }
    }
    if (block_marks.empty()) {
        throw Error("document carries no # tb marks");
    }

    const std::size_t n = block_marks.size();
    const Circuit& layout_check = full;
    if (layout_check.num_lines() < 2 * n) {
        throw Error("too few lines for " + std::to_string(n) + " testable blocks");
    }
    const unsigned d = layout_check.num_lines() - static_cast<unsigned>(2 * n - 1);

    TestableCircuit tc{Circuit(full.num_lines()), Circuit(d), {}, {}, 0};
    tc.circuit.set_labels(full.labels());
    for (const auto& [line, value] : full.constants()) {
        tc.circuit.set_constant(line, value);
    }
    for (unsigned line : full.garbage()) {
        tc.circuit.set_garbage(line);
    }

    std::vector<std::string> original_labels;
    for (unsigned i = 0; i < d; ++i) {
        original_labels.push_back(full.label(i));
    }
    tc.original.set_labels(original_labels);
    for (const auto& [line, value] : full.constants()) {
        if (line < d) {
            tc.original.set_constant(line, value);
        }
    }
    for (unsigned line : full.garbage()) {
        if (line < d) {
            tc.original.set_garbage(line);
        }
    }

    std::size_t cursor = 0;
    for (std::size_t b = 0; b < n; ++b) {
        const RealMark& mark = block_marks[b];
        if (mark.block_index != b || mark.gate_index != cursor) {
            throw Error("testable blocks out of order at # tb " +
                        std::to_string(mark.block_index));
        }
        if (cursor >= gates.size()) {
            throw Error("# tb " + std::to_string(b) + " marks no gates");
        }
        const GateInstance& base_gate = gates[cursor];
        const unsigned parity = d + static_cast<unsigned>(b);
        const unsigned arity = base_gate.kind.arity();
        if (cursor + 1 + 2 * arity > gates.size()) {
            throw Error("truncated expansion of block " + std::to_string(b));
        }
        for (unsigned j = 0; j < 2 * arity; ++j) {
            const GateInstance& fan = gates[cursor + 1 + j];
            if (fan.kind.rule() != GateRule::Feynman ||
                fan.lines[0] != base_gate.lines[j % arity] || fan.lines[1] != parity) {
                throw Error("block " + std::to_string(b) +
                            " does not match the TRG expansion layout");
            }
        }
        TestableBlock block = make_tb(base_gate.kind, base_gate.lines, parity);
        tc.circuit.add_gate(block.trg_r());
        tc.circuit.add_gate(block.trg_s());
        tc.original.add_gate(base_gate.kind, base_gate.lines);
        tc.blocks.push_back(std::move(block));
        cursor += 1 + 2 * static_cast<std::size_t>(arity);
    }

    if (n == 1) {
        if (checker_start || cursor != gates.size()) {
            throw Error("single-block circuit cannot have checker gates");
        }
    } else {
        if (!checker_start || *checker_start != cursor) {
            throw Error("missing or misplaced # checker mark");
        }
        if (gates.size() - cursor != n - 1) {
            throw Error("checker needs " + std::to_string(n - 1) + " gates, found " +
                        std::to_string(gates.size() - cursor));
        }
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const GateInstance& gate = gates[cursor + i];
            if (gate.kind.rule() != GateRule::Mfrg) {
                throw Error("checker gate " + std::to_string(i) + " is not an MFRG");
            }
            tc.checker_gates.push_back(gate);
            tc.circuit.add_gate(gate);
        }
    }
    tc.error_line = d + static_cast<unsigned>(n) - 1;
    return tc;
}

std::string_view design_name(Design design) {
    switch (design) {
    case Design::Proposed:
        return "proposed";
    case Design::Vasudevan06:
        return "vasudevan06";
    case Design::Thapliyal07:
        return "thapliyal07";
    case Design::Hasan09:
        return "hasan09";
    }
    return "?";
}

FormulaCosts checker_cost_formula(Design design, std::int64_t n) {
    switch (design) {
    case Design::Proposed:
        return {n - 1, 2 * (n - 1), 4 * (n - 1)};
    case Design::Vasudevan06:
        return {6 * n, 8 * n, std::nullopt};
    case Design::Thapliyal07:
        return {6 * n, 8 * n, 30 * n};
    case Design::Hasan09:
        return {2 * n, 3 * n, 6 * n};
    }
    throw Error("unknown design");
}

FormulaCosts circuit_cost_formula(Design design, std::int64_t n) {
    switch (design) {
    case Design::Proposed:
        return {3 * n - 1, 2 * (n - 1), std::nullopt};
    case Design::Vasudevan06:
    case Design::Thapliyal07:
        return {8 * n, 10 * n, std::nullopt};
    case Design::Hasan09:
        return {4 * n, 5 * n, std::nullopt};
    }
    throw Error("unknown design");
}

CostReport count_report(const TestableCircuit& tc, const CostTable& table) {
    CostReport report;
    report.block_count = tc.blocks.size();

    report.original.gates = tc.original.gate_count();
    report.original.garbage = tc.original.garbage().size();
    report.original.constant_inputs = tc.original.constants().size();
    report.original.quantum_cost = quantum_cost(tc.original, table);

    report.transformed.gates = tc.circuit.gate_count();
    report.transformed.garbage = tc.circuit.garbage().size();
    report.transformed.constant_inputs = tc.circuit.constants().size();
    report.transformed.quantum_cost = quantum_cost(tc.circuit, table);

    const auto n = static_cast<std::int64_t>(report.block_count);
    constexpr std::array<Design, 4> designs = {Design::Proposed, Design::Vasudevan06,
                                               Design::Thapliyal07, Design::Hasan09};
    for (std::size_t i = 0; i < designs.size(); ++i) {
        report.checker_designs[i] = {designs[i], checker_cost_formula(designs[i], n)};
        report.circuit_designs[i] = {designs[i], circuit_cost_formula(designs[i], n)};
    }
    return report;
}

} // namespace revtest
