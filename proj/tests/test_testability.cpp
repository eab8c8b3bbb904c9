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

#include <doctest.h>

#include <random>

#include "revtest/testability.hpp"
#include "test_support.hpp"

using namespace revtest;
using test_support::load_fixture;
using test_support::random_circuit;

namespace {

LineMap identity_map(unsigned lines) {
    LineMap map;
    for (unsigned i = 0; i < lines; ++i) {
        map.emplace_back(i, i);
    }
    return map;
}

} // namespace

TEST_CASE("TRG wrapper appends the output parity") {
    const GateKind trg_toffoli = make_trg(GateKind::builtin("TOFFOLI", 3));
    CHECK(trg_toffoli.arity() == 4);
    CHECK(trg_toffoli.eval(0b0011) == 0b1111); // (1,1,0,0) -> (1,1,1,1)

    const GateKind trg_feynman = make_trg(GateKind::builtin("FEYNMAN", 2));
    CHECK(trg_feynman.eval(0b001) == 0b011); // (1,0,0) -> (1,1,0)

    // carried bit XORs into the parity output
    CHECK(trg_toffoli.eval(0b1000) == 0b1000); // zero data, c=1 -> parity out 1
    for (std::uint32_t x = 0; x < 8; ++x) {
        const std::uint32_t plain = trg_toffoli.eval(x);
        const std::uint32_t carried = trg_toffoli.eval(x | 0b1000);
        CHECK((plain ^ carried) == 0b1000);
    }
}

TEST_CASE("TRG wrappers of every built-in are bijective") {
    std::vector<GateKind> bases = {
        GateKind::builtin("NOT", 1),   GateKind::builtin("FEYNMAN", 2),
        GateKind::builtin("PERES", 3), GateKind::builtin("MFRG", 3),
    };
    for (unsigned arity = 3; arity <= 6; ++arity) {
        bases.push_back(GateKind::builtin("TOFFOLI", arity));
    }
    for (unsigned arity = 3; arity <= 5; ++arity) {
        bases.push_back(GateKind::builtin("FREDKIN", arity));
    }
    for (const GateKind& base : bases) {
        CAPTURE(base.name());
        CHECK(verify_bijective(make_trg(base)));
    }
}

TEST_CASE("TRG rejects a non-bijective base") {
    const GateKind broken = GateKind::from_table("BROKEN", 2, {0, 0, 2, 3});
    CHECK_THROWS_AS(make_trg(broken), Error);
}

TEST_CASE("testable block passes data through and zeroes the parity line") {
    const TestableBlock block = make_tb(GateKind::builtin("TOFFOLI", 3), {0, 1, 2}, 3);
    const Circuit circuit = tb_circuit(block);

    const Assignment out =
        run(circuit, Assignment::from_string("1100"), ConstantMode::Enforce);
    CHECK(out.to_string() == "1110");

    // full 16-row sweep: the parity input always passes through unchanged
    for (std::uint32_t x = 0; x < 16; ++x) {
        const Assignment input = Assignment::from_index(4, x);
        const Assignment result = run(circuit, input, ConstantMode::Ignore);
        CHECK(result.bit(3) == input.bit(3));
    }
}

TEST_CASE("testable block over FEYNMAN keeps the parity output at zero") {
    const TestableBlock block = make_tb(GateKind::builtin("FEYNMAN", 2), {0, 1}, 2);
    const Circuit circuit = tb_circuit(block);
    for (std::uint32_t x = 0; x < 8; ++x) {
        const Assignment input = Assignment::from_index(3, x);
        const Assignment result = run(circuit, input, ConstantMode::Ignore);
        CHECK(result.bit(2) == input.bit(2));
        if (!input.bit(2)) {
            CHECK_FALSE(result.bit(2));
        }
    }
}

TEST_CASE("a flip at the internal cut raises the block parity output") {
    const TestableBlock block = make_tb(GateKind::builtin("TOFFOLI", 3), {0, 1, 2}, 3);
    for (unsigned wire = 0; wire < block.cut_wire_count(); ++wire) {
        for (std::uint32_t x = 0; x < 8; ++x) {
            Assignment state = Assignment::from_index(4, x);
            apply_gate(block.trg_r(), state);
            state.flip_bit(wire < 3 ? block.data_lines[wire] : block.parity_line);
            apply_gate(block.trg_s(), state);
            CHECK(state.bit(block.parity_line));
        }
    }
}

TEST_CASE("make_tb validates its lines") {
    CHECK_THROWS_AS(make_tb(GateKind::builtin("TOFFOLI", 3), {0, 1}, 3), Error);
    CHECK_THROWS_AS(make_tb(GateKind::builtin("TOFFOLI", 3), {0, 1, 1}, 3), Error);
    CHECK_THROWS_AS(make_tb(GateKind::builtin("TOFFOLI", 3), {0, 1, 2}, 2), Error);
}

TEST_CASE("checker structure matches the closed forms") {
    SUBCASE("four blocks need three MFRGs, six garbage lines, cost 12") {
        const Circuit checker = checker_circuit(4);
        CHECK(checker.gate_count() == 3);
        CHECK(checker.garbage().size() == 6);
        CHECK(quantum_cost(checker) == 12);
        for (const GateInstance& gate : checker.gates()) {
            CHECK(gate.kind.rule() == GateRule::Mfrg);
        }
    }
    SUBCASE("single block needs no checker") {
        const Circuit checker = checker_circuit(1);
        CHECK(checker.gate_count() == 0);
        CHECK(checker.garbage().empty());
        CHECK(quantum_cost(checker) == 0);
    }
    SUBCASE("list length mismatch is rejected") {
        CHECK_THROWS_AS(make_checker({0, 1, 2}, {3}), Error);
        CHECK_THROWS_AS(make_checker({}, {}), Error);
    }
}

TEST_CASE("checker output is the OR of its parity inputs") {
    for (unsigned n : {1u, 2u, 3u, 4u, 6u}) {
        CAPTURE(n);
        const Circuit checker = checker_circuit(n);
        const unsigned error_line = n - 1;
        for (std::uint32_t pattern = 0; pattern < (1u << n); ++pattern) {
            const Assignment input = assignment_with_constants(checker, pattern);
            const Assignment out = run(checker, input, ConstantMode::Enforce);
            CHECK(out.bit(error_line) == (pattern != 0));
        }
    }
}

TEST_CASE("checker examples") {
    const Circuit checker = checker_circuit(3);
    SUBCASE("all-zero parity inputs give E = 0") {
        const Assignment out =
            run(checker, assignment_with_constants(checker, 0b000), ConstantMode::Enforce);
        CHECK_FALSE(out.bit(2));
    }
    SUBCASE("a single raised parity input gives E = 1") {
        const Assignment out =
            run(checker, assignment_with_constants(checker, 0b010), ConstantMode::Enforce);
        CHECK(out.bit(2));
    }
}

TEST_CASE("transform reproduces the golden counts for 3_17 and rd32") {
    SUBCASE("3_17: 6 gates -> 17 gates, 10 garbage") {
        const TestableCircuit tc = transform(load_fixture("3_17.real"));
        CHECK(tc.circuit.gate_count() == 17);
        CHECK(tc.circuit.garbage().size() == 10);
        CHECK(tc.blocks.size() == 6);
        CHECK(tc.checker_gates.size() == 5);
    }
    SUBCASE("rd32: 4 gates -> 11 gates, 8 garbage total") {
        const TestableCircuit tc = transform(load_fixture("rd32.real"));
        CHECK(tc.circuit.gate_count() == 11);
        CHECK(tc.circuit.garbage().size() == 8);
    }
}

TEST_CASE("transform layout: parity lines then constant-1 lines") {
    const Circuit original = load_fixture("ham3.real"); // 3 lines, 4 gates
    const TestableCircuit tc = transform(original);
    CHECK(tc.circuit.num_lines() == 3 + 4 + 3);
    for (unsigned i = 0; i < 4; ++i) {
        CHECK(tc.circuit.constants().at(3 + i) == false);
        CHECK(tc.blocks[i].parity_line == 3 + i);
    }
    for (unsigned i = 0; i < 3; ++i) {
        CHECK(tc.circuit.constants().at(7 + i) == true);
    }
    CHECK(tc.error_line == 6);
    CHECK_FALSE(tc.circuit.is_garbage(tc.error_line));
    CHECK(tc.original == original);
}

TEST_CASE("single-gate circuits transform to two gates and no checker") {
    Circuit circuit(2);
    circuit.add_gate(GateKind::builtin("FEYNMAN", 2), {0, 1});
    const TestableCircuit tc = transform(circuit);
    CHECK(tc.circuit.gate_count() == 2);
    CHECK(tc.checker_gates.empty());
    CHECK(tc.error_line == 2);
    CHECK(tc.circuit.garbage().empty());
    CHECK(tc.circuit.constants() == std::map<unsigned, bool>{{2, false}});
}

TEST_CASE("transform rejects empty and non-bijective circuits") {
    CHECK_THROWS_AS(transform(Circuit(3)), Error);

    Circuit corrupt(2);
    corrupt.add_gate(GateKind::from_table("BROKEN", 2, {0, 0, 2, 3}), {0, 1});
    CHECK_THROWS_AS(transform(corrupt), Error);
}

TEST_CASE("transform preserves the data-line function") {
    for (const char* name : {"3_17.real", "ham3.real", "rd32.real"}) {
        CAPTURE(name);
        const Circuit original = load_fixture(name);
        const TestableCircuit tc = transform(original);
        CHECK(equivalent_on_lines(original, tc.circuit, identity_map(original.num_lines())));
    }
}

TEST_CASE("expanded circuit computes the same function as the logical one") {
    const TestableCircuit tc = transform(load_fixture("3_17.real"));
    const Circuit expanded = expand(tc);
    CHECK(expanded.num_lines() == tc.circuit.num_lines());
    CHECK(truth_table(expanded).rows == truth_table(tc.circuit).rows);
}

TEST_CASE("transformed circuits stay reversible") {
    const TestableCircuit tc = transform(load_fixture("ham3.real"));
    CHECK(is_reversible(tc.circuit));
}

TEST_CASE("structural counts follow the closed forms on random circuits") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        const unsigned lines = 2 + rng() % 8;
        const std::size_t n = 1 + rng() % 30;
        const Circuit original = random_circuit(rng, lines, n);
        const TestableCircuit tc = transform(original);
        CAPTURE(trial);
        CHECK(tc.circuit.gate_count() == 3 * n - 1);
        CHECK(tc.circuit.garbage().size() == original.garbage().size() + 2 * (n - 1));
        CHECK(tc.circuit.constants().size() ==
              original.constants().size() + n + (n - 1));
        CHECK(tc.circuit.num_lines() == lines + 2 * n - 1);
    }
}

TEST_CASE("fault sites enumerate every cut wire") {
    const TestableCircuit tc = transform(load_fixture("3_17.real"));
    // gate arities of 3_17: 2,3,1,3,2,3 -> cut wires 3+4+2+4+3+4 = 20
    CHECK(tc.all_fault_sites().size() == 20);
    CHECK(tc.cut_points(2).size() == 2);
    CHECK_THROWS_AS(tc.cut_points(6), Error);
}

TEST_CASE("count report tallies and formula rows") {
    const TestableCircuit tc = transform(load_fixture("3_17.real"));
    const CostReport report = count_report(tc);

    CHECK(report.block_count == 6);
    CHECK(report.original.gates == 6);
    CHECK(report.original.quantum_cost == 18);
    CHECK(report.transformed.gates == 17);
    CHECK(report.transformed.garbage == 10);
    CHECK(report.transformed.constant_inputs == 11);
    CHECK(report.transformed.quantum_cost == 66);

    SUBCASE("checker formulas at n = 2") {
        const FormulaCosts proposed = checker_cost_formula(Design::Proposed, 2);
        CHECK(proposed.gates == 1);
        CHECK(proposed.garbage == 2);
        CHECK(proposed.quantum_cost == 4);
        const FormulaCosts hasan = checker_cost_formula(Design::Hasan09, 2);
        CHECK(hasan.gates == 4);
        CHECK(hasan.garbage == 6);
        CHECK(hasan.quantum_cost == 12);
    }
    SUBCASE("circuit formulas at n = 10") {
        const FormulaCosts proposed = circuit_cost_formula(Design::Proposed, 10);
        CHECK(proposed.gates == 29);
        CHECK(proposed.garbage == 18);
        const FormulaCosts vasudevan = circuit_cost_formula(Design::Vasudevan06, 10);
        CHECK(vasudevan.gates == 80);
        CHECK(vasudevan.garbage == 100);
    }
    SUBCASE("checker formulas at the single-block boundary") {
        const FormulaCosts proposed = checker_cost_formula(Design::Proposed, 1);
        CHECK(proposed.gates == 0);
        CHECK(proposed.garbage == 0);
        CHECK(proposed.quantum_cost == 0);
    }
    SUBCASE("thapliyal07 checker carries the 30n cost") {
        const FormulaCosts thapliyal = checker_cost_formula(Design::Thapliyal07, 3);
        CHECK(thapliyal.gates == 18);
        CHECK(thapliyal.garbage == 24);
        CHECK(thapliyal.quantum_cost == 90);
        CHECK_FALSE(checker_cost_formula(Design::Vasudevan06, 3).quantum_cost.has_value());
    }
}

TEST_CASE("reconstruction round trip preserves provenance") {
    const TestableCircuit tc = transform(load_fixture("4mod5.real"));
    const TestableCircuit back = reconstruct_testable(parse_real_document(emit_real(tc)));
    CHECK(back.circuit == tc.circuit);
    CHECK(back.original == tc.original);
    CHECK(back.blocks.size() == tc.blocks.size());
    for (std::size_t i = 0; i < back.blocks.size(); ++i) {
        CHECK(back.blocks[i].base == tc.blocks[i].base);
        CHECK(back.blocks[i].data_lines == tc.blocks[i].data_lines);
        CHECK(back.blocks[i].parity_line == tc.blocks[i].parity_line);
    }
}

TEST_CASE("reconstruction rejects documents without provenance") {
    const RealDocument doc =
        parse_real_document(emit_real(load_fixture("3_17.real")));
    CHECK_THROWS_AS(reconstruct_testable(doc), Error);
}
