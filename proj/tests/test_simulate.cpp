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

#include "revtest/simulate.hpp"
#include "test_support.hpp"

using namespace revtest;
using test_support::load_fixture;
using test_support::random_circuit;

TEST_CASE("assignment encoding round trip") {
    const Assignment a = Assignment::from_index(5, 0b10110);
    CHECK(a.to_string() == "01101"); // line 0 first
    CHECK(a.to_index() == 0b10110);
    CHECK(Assignment::from_string("01101") == a);

    CHECK_THROWS_AS(Assignment::from_index(3, 8), Error);
    CHECK_THROWS_AS(Assignment::from_string("01x"), Error);
}

TEST_CASE("run applies gates in order and passes other lines through") {
    SUBCASE("empty circuit is the identity") {
        const Circuit circuit(4);
        const Assignment input = Assignment::from_string("1010");
        CHECK(run(circuit, input, ConstantMode::Ignore) == input);
    }
    SUBCASE("single FEYNMAN on lines 0,1") {
        Circuit circuit(3);
        circuit.add_gate(GateKind::builtin("FEYNMAN", 2), {0, 1});
        const Assignment out =
            run(circuit, Assignment::from_string("100"), ConstantMode::Ignore);
        CHECK(out.to_string() == "110");
    }
    SUBCASE("length mismatch is rejected") {
        const Circuit circuit(3);
        CHECK_THROWS_AS(run(circuit, Assignment(2), ConstantMode::Ignore), Error);
    }
}

TEST_CASE("constant enforcement") {
    Circuit circuit(2);
    circuit.set_constant(1, true);
    const Assignment contradicts = Assignment::from_string("10");
    CHECK_THROWS_AS(run(circuit, contradicts, ConstantMode::Enforce), Error);
    CHECK(run(circuit, contradicts, ConstantMode::Ignore) == contradicts);

    CHECK(free_lines(circuit) == std::vector<unsigned>{0});
    const Assignment filled = assignment_with_constants(circuit, 0b1);
    CHECK(filled.to_string() == "11");
    CHECK_THROWS_AS(assignment_with_constants(circuit, 0b10), Error);
}

TEST_CASE("truth tables of the smallest circuits") {
    SUBCASE("NOT on one line") {
        Circuit circuit(1);
        circuit.add_gate(GateKind::builtin("NOT", 1), {0});
        CHECK(truth_table(circuit).rows == std::vector<std::uint32_t>{1, 0});
    }
    SUBCASE("FEYNMAN on two lines") {
        Circuit circuit(2);
        circuit.add_gate(GateKind::builtin("FEYNMAN", 2), {0, 1});
        CHECK(truth_table(circuit).rows == std::vector<std::uint32_t>{0, 3, 2, 1});
    }
}

TEST_CASE("truth table resource guard") {
    const Circuit wide(kMaxExhaustiveLines + 1);
    CHECK_THROWS_AS(truth_table(wide), Error);
}

TEST_CASE("3_17 fixture evaluates to its frozen rows") {
    const Circuit circuit = load_fixture("3_17.real");
    const Assignment out =
        run(circuit, Assignment::from_string("000"), ConstantMode::Enforce);
    CHECK(out.to_string() == "111");

    const TruthTable table = truth_table(circuit);
    CHECK(table.rows[0] == 7); // 000 -> 111
    CHECK(table.rows[3] == 5); // 110 -> 101
    CHECK(table.is_permutation());
}

TEST_CASE("compositions of built-ins are reversible") {
    std::mt19937_64 rng(0xC0FFEE);
    for (int trial = 0; trial < 25; ++trial) {
        const unsigned lines = 2 + rng() % 7;
        const Circuit circuit = random_circuit(rng, lines, 1 + rng() % 24);
        CAPTURE(trial);
        CHECK(is_reversible(circuit));
    }
}

TEST_CASE("a non-bijective kind breaks reversibility") {
    Circuit circuit(2);
    circuit.add_gate(GateKind::from_table("BROKEN", 2, {0, 0, 2, 3}), {0, 1});
    CHECK_FALSE(is_reversible(circuit));
}

TEST_CASE("truth table agrees with run on random rows of every fixture") {
    const char* fixtures[] = {"3_17.real", "ham3.real", "rd32.real",      "xor5.real",
                              "4mod5.real", "5mod5.real", "hwb4.real",    "hwb5.real",
                              "4_49.real",  "rd53.real",  "ham7.real",    "mod5adder.real"};
    std::mt19937_64 rng(2024);
    for (const char* name : fixtures) {
        CAPTURE(name);
        const Circuit circuit = load_fixture(name);
        const TruthTable table = truth_table(circuit);
        for (int i = 0; i < 64; ++i) {
            const std::uint64_t x = rng() % table.rows.size();
            const Assignment out = run(
                circuit, Assignment::from_index(circuit.num_lines(), x), ConstantMode::Ignore);
            CHECK(out.to_index() == table.rows[x]);
        }
    }
}

TEST_CASE("self-inverse gate lists undo themselves when reversed") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        const unsigned lines = 3 + rng() % 4;
        const Circuit forward =
            random_circuit(rng, lines, 1 + rng() % 15, {.annotate = false, .self_inverse_only = true});
        Circuit reversed(lines);
        for (auto it = forward.gates().rbegin(); it != forward.gates().rend(); ++it) {
            reversed.add_gate(*it);
        }
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << lines); ++x) {
            const Assignment input = Assignment::from_index(lines, x);
            const Assignment there = run(forward, input, ConstantMode::Ignore);
            CHECK(run(reversed, there, ConstantMode::Ignore) == input);
        }
    }
}

TEST_CASE("equivalence checking") {
    const Circuit circuit = load_fixture("rd32.real");
    LineMap identity;
    for (unsigned i = 0; i < circuit.num_lines(); ++i) {
        identity.emplace_back(i, i);
    }
    CHECK(equivalent_on_lines(circuit, circuit, identity));

    SUBCASE("detects a functional difference") {
        Circuit tweaked = circuit;
        tweaked.add_gate(GateKind::builtin("NOT", 1), {1});
        CHECK_FALSE(equivalent_on_lines(circuit, tweaked, identity));
    }
    SUBCASE("rejects non-injective maps") {
        LineMap bad = identity;
        bad.emplace_back(0, 1);
        CHECK_THROWS_AS(equivalent_on_lines(circuit, circuit, bad), Error);
    }
    SUBCASE("rejects out-of-range maps") {
        LineMap bad = {{0, 99}};
        CHECK_THROWS_AS(equivalent_on_lines(circuit, circuit, bad), Error);
    }
}
