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

#include <algorithm>

#include "revtest/faultsim.hpp"
#include "test_support.hpp"

using namespace revtest;
using test_support::load_fixture;

namespace {

TestableCircuit transformed_fixture(const char* name) {
    return transform(load_fixture(name));
}

} // namespace

TEST_CASE("fault-free runs keep E at zero") {
    const TestableCircuit tc = transformed_fixture("rd32.real");
    const std::uint64_t patterns = std::uint64_t{1} << free_lines(tc.circuit).size();
    for (std::uint64_t bits = 0; bits < patterns; ++bits) {
        const Assignment out = run(tc.circuit, assignment_with_constants(tc.circuit, bits),
                                   ConstantMode::Enforce);
        CHECK_FALSE(out.bit(tc.error_line));
    }
}

TEST_CASE("injected flips raise E") {
    const TestableCircuit tc = transformed_fixture("rd32.real");
    SUBCASE("parity wire of any block, any input") {
        for (std::size_t b = 0; b < tc.blocks.size(); ++b) {
            const FaultSite site{b, tc.blocks[b].arity()};
            const Assignment out =
                inject(tc, site, assignment_with_constants(tc.circuit, 0b101));
            CHECK(out.bit(tc.error_line));
        }
    }
    SUBCASE("data wire 0 of the first block on the all-zero input") {
        const Assignment out =
            inject(tc, {0, 0}, assignment_with_constants(tc.circuit, 0));
        CHECK(out.bit(tc.error_line));
    }
}

TEST_CASE("inject validates the site and the input") {
    const TestableCircuit tc = transformed_fixture("rd32.real");
    const Assignment input = assignment_with_constants(tc.circuit, 0);
    CHECK_THROWS_AS(inject(tc, {99, 0}, input), Error);
    CHECK_THROWS_AS(inject(tc, {0, 9}, input), Error);
    Assignment contradicts = input;
    contradicts.flip_bit(tc.blocks[0].parity_line);
    CHECK_THROWS_AS(inject(tc, {0, 0}, contradicts), Error);
}

TEST_CASE("exhaustive campaign over a single-FEYNMAN circuit") {
    Circuit circuit(2);
    circuit.add_gate(GateKind::builtin("FEYNMAN", 2), {0, 1});
    const TestableCircuit tc = transform(circuit);

    const CoverageReport report = run_campaign(tc, {});
    CHECK(report.total_trials == 12); // 3 sites x 4 inputs
    CHECK(report.detected == 12);
    CHECK(report.undetected.empty());
    CHECK(report.full_coverage());
    CHECK(report.coverage() == doctest::Approx(1.0));
}

TEST_CASE("exhaustive campaign over transformed 3_17") {
    const CoverageReport report = run_campaign(transformed_fixture("3_17.real"), {});
    CHECK(report.total_trials == 160); // 20 cut wires x 8 inputs
    CHECK(report.detected == 160);
    CHECK(report.undetected.empty());
}

TEST_CASE("campaign validates sites and modes") {
    const TestableCircuit tc = transformed_fixture("rd32.real");

    Campaign bad_site;
    bad_site.sites = {{42, 0}};
    CHECK_THROWS_AS(run_campaign(tc, bad_site), Error);

    Campaign sampled;
    sampled.inputs = Campaign::Inputs::Sampled;
    sampled.samples = 10;
    CHECK_THROWS_AS(run_campaign(tc, sampled), Error); // no seed

    sampled.seed = 1;
    sampled.samples = 0;
    CHECK_THROWS_AS(run_campaign(tc, sampled), Error);
}

TEST_CASE("sampled campaigns are deterministic in their seed") {
    const TestableCircuit tc = transformed_fixture("xor5.real");
    Campaign campaign;
    campaign.inputs = Campaign::Inputs::Sampled;
    campaign.samples = 500;
    campaign.seed = 42;

    const CoverageReport first = run_campaign(tc, campaign);
    const CoverageReport second = run_campaign(tc, campaign);
    CHECK(first.total_trials == 500);
    CHECK(first.detected == 500);
    CHECK(to_csv(first) == to_csv(second));
    CHECK(summary(first) == summary(second));
    CHECK(first.seed == 42);

    campaign.seed = 43;
    const CoverageReport other = run_campaign(tc, campaign);
    CHECK(other.detected == 500);
    CHECK(to_csv(other) != to_csv(first));
}

TEST_CASE("same-block double faults cancel in the parity") {
    const TestableCircuit tc = transformed_fixture("rd32.real");
    const std::uint64_t patterns = std::uint64_t{1} << free_lines(tc.circuit).size();
    for (std::size_t b = 0; b < tc.blocks.size(); ++b) {
        const unsigned wires = tc.blocks[b].cut_wire_count();
        for (unsigned w1 = 0; w1 < wires; ++w1) {
            for (unsigned w2 = w1 + 1; w2 < wires; ++w2) {
                for (std::uint64_t bits = 0; bits < patterns; ++bits) {
                    const bool detected =
                        double_fault_probe(tc, {b, w1}, {b, w2},
                                           assignment_with_constants(tc.circuit, bits));
                    CHECK_FALSE(detected);
                }
            }
        }
    }
}

TEST_CASE("double fault probe validates its sites") {
    const TestableCircuit tc = transformed_fixture("rd32.real");
    const Assignment input = assignment_with_constants(tc.circuit, 0);
    CHECK_THROWS_AS(double_fault_probe(tc, {0, 1}, {0, 1}, input), Error);
    CHECK_THROWS_AS(double_fault_probe(tc, {0, 1}, {1, 1}, input), Error);
}

TEST_CASE("dropping the checker's last gate leaks faults") {
    const TestableCircuit tc = transformed_fixture("rd32.real");
    const TestableCircuit cut = drop_last_checker_gate(tc);
    CHECK(cut.circuit.gate_count() == tc.circuit.gate_count() - 1);

    const CoverageReport report = run_campaign(cut, {});
    CHECK(report.detected < report.total_trials);
    CHECK_FALSE(report.undetected.empty());
    CHECK(report.coverage() < 1.0);

    // the fault escape names a concrete witness in a disconnected block
    CHECK(report.undetected.front().site.block < tc.blocks.size() - 1);
}

TEST_CASE("single-block circuits have no checker gate to drop") {
    Circuit circuit(2);
    circuit.add_gate(GateKind::builtin("FEYNMAN", 2), {0, 1});
    const TestableCircuit tc = transform(circuit);
    CHECK_THROWS_AS(drop_last_checker_gate(tc), Error);
}

TEST_CASE("coverage report serialization") {
    const TestableCircuit tc = transformed_fixture("rd32.real");
    Campaign campaign;
    campaign.sites = {{0, 0}};
    const CoverageReport report = run_campaign(tc, campaign);

    const std::string csv = to_csv(report);
    CHECK(csv.rfind("block,wire,input,detected\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + report.total_trials);

    const std::string text = summary(report);
    CHECK(text.find("coverage:  1.000") != std::string::npos);
}
