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

#include "revtest/faultsim.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace revtest {

namespace {

void check_site(const TestableCircuit& tc, FaultSite site) {
    if (site.block >= tc.blocks.size()) {
        throw Error("fault site block " + std::to_string(site.block) +
                    " out of range, circuit has " + std::to_string(tc.blocks.size()) +
                    " blocks");
    }
    if (site.wire >= tc.blocks[site.block].cut_wire_count()) {
        throw Error("fault site wire " + std::to_string(site.wire) +
                    " out of range, block " + std::to_string(site.block) + " has " +
                    std::to_string(tc.blocks[site.block].cut_wire_count()) + " cut wires");
    }
}

unsigned cut_line(const TestableCircuit& tc, FaultSite site) {
    const TestableBlock& block = tc.blocks[site.block];
    return site.wire < block.arity() ? block.data_lines[site.wire] : block.parity_line;
}

// Simulates the logical gate list, flipping the given cut wires right
// after the owning block's TRG(R). Wires must belong to a single block.
Assignment run_with_flips(const TestableCircuit& tc, std::size_t block,
                          const std::vector<unsigned>& flip_lines, const Assignment& input) {
    Assignment state = input;
    const std::size_t cut_after = 2 * block; // gate index of the block's TRG(R)
    for (std::size_t i = 0; i < tc.circuit.gates().size(); ++i) {
        apply_gate(tc.circuit.gates()[i], state);
        if (i == cut_after) {
            for (unsigned line : flip_lines) {
                state.flip_bit(line);
            }
        }
    }
    return state;
}

void check_input(const TestableCircuit& tc, const Assignment& input) {
    if (input.size() != tc.circuit.num_lines()) {
        throw Error("input has " + std::to_string(input.size()) + " bits, circuit has " +
                    std::to_string(tc.circuit.num_lines()) + " lines");
    }
    for (const auto& [line, value] : tc.circuit.constants()) {
        if (input.bit(line) != value) {
            throw Error("input contradicts constant line " + std::to_string(line));
        }
    }
}

} // namespace

Assignment inject(const TestableCircuit& tc, FaultSite site, const Assignment& input) {
    check_site(tc, site);
    check_input(tc, input);
    return run_with_flips(tc, site.block, {cut_line(tc, site)}, input);
}

bool double_fault_probe(const TestableCircuit& tc, FaultSite first, FaultSite second,
                        const Assignment& input) {
    check_site(tc, first);
    check_site(tc, second);
    if (first.block != second.block) {
        throw Error("double-fault probe requires sites in the same block; run two "
                    "single-fault campaigns instead");
    }
    if (first.wire == second.wire) {
        throw Error("double-fault probe requires two distinct wires");
    }
    check_input(tc, input);
    const Assignment out = run_with_flips(
        tc, first.block, {cut_line(tc, first), cut_line(tc, second)}, input);
    return out.bit(tc.error_line);
}

CoverageReport run_campaign(const TestableCircuit& tc, const Campaign& campaign) {
    std::vector<FaultSite> sites = campaign.sites;
    if (sites.empty()) {
        sites = tc.all_fault_sites();
    } else {
        for (FaultSite site : sites) {
            check_site(tc, site);
        }
    }

    const std::vector<unsigned> free = free_lines(tc.circuit);
    CoverageReport report;

    auto record = [&](FaultSite site, const Assignment& input) {
        const Assignment out = run_with_flips(tc, site.block, {cut_line(tc, site)}, input);
        Trial trial{site, input, out.bit(tc.error_line)};
        report.total_trials += 1;
        if (trial.detected) {
            report.detected += 1;
        } else {
            report.undetected.push_back(trial);
        }
        report.trials.push_back(std::move(trial));
    };

    if (campaign.inputs == Campaign::Inputs::Exhaustive) {
        if (free.size() > kMaxExhaustiveLines) {
            throw Error("exhaustive campaign limited to " +
                        std::to_string(kMaxExhaustiveLines) + " free lines, circuit has " +
                        std::to_string(free.size()));
        }
        const std::uint64_t patterns = std::uint64_t{1} << free.size();
        for (FaultSite site : sites) {
            for (std::uint64_t bits = 0; bits < patterns; ++bits) {
                record(site, assignment_with_constants(tc.circuit, bits));
            }
        }
    } else {
        if (!campaign.seed) {
            throw Error("sampled campaign requires an explicit seed");
        }
        if (campaign.samples == 0) {
            throw Error("sampled campaign requires a positive sample count");
        }
        report.seed = campaign.seed;
        std::mt19937_64 rng(*campaign.seed);
        const std::uint64_t mask =
            free.size() >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << free.size()) - 1;
        for (std::size_t t = 0; t < campaign.samples; ++t) {
            const FaultSite site = sites[rng() % sites.size()];
            record(site, assignment_with_constants(tc.circuit, rng() & mask));
        }
    }
    return report;
}

TestableCircuit drop_last_checker_gate(const TestableCircuit& tc) {
    if (tc.checker_gates.empty()) {
        throw Error("circuit has no checker gates to drop");
    }
    TestableCircuit cut = tc;
    cut.checker_gates.pop_back();

    Circuit circuit(tc.circuit.num_lines());
    circuit.set_labels(tc.circuit.labels());
    for (const auto& [line, value] : tc.circuit.constants()) {
        circuit.set_constant(line, value);
    }
    for (unsigned line : tc.circuit.garbage()) {
        circuit.set_garbage(line);
    }
    for (std::size_t i = 0; i + 1 < tc.circuit.gates().size(); ++i) {
        circuit.add_gate(tc.circuit.gates()[i]);
    }
    cut.circuit = std::move(circuit);
    return cut;
}

std::string to_csv(const CoverageReport& report) {
    std::ostringstream out;
    out << "block,wire,input,detected\n";
    for (const Trial& trial : report.trials) {
        out << trial.site.block << ',' << trial.site.wire << ',' << trial.input.to_string()
            << ',' << (trial.detected ? 1 : 0) << '\n';
    }
    return out.str();
}

std::string summary(const CoverageReport& report) {
    std::ostringstream out;
    out << "trials:    " << report.total_trials << '\n';
    out << "detected:  " << report.detected << '\n';
    // truncated, not rounded: only exact full coverage prints as 1.000
    const double truncated = std::floor(report.coverage() * 1000.0) / 1000.0;
    out << "coverage:  ";
    out.setf(std::ios::fixed);
    out.precision(3);
    out << truncated << '\n';
    if (report.seed) {
        out << "seed:      " << *report.seed << '\n';
    }
    if (!report.undetected.empty()) {
        out << "undetected:\n";
        std::size_t shown = 0;
        for (const Trial& trial : report.undetected) {
            out << "  block " << trial.site.block << " wire " << trial.site.wire
                << " input " << trial.input.to_string() << '\n';
            if (++shown == 16 && report.undetected.size() > 16) {
                out << "  ... " << (report.undetected.size() - shown) << " more\n";
                break;
            }
        }
    }
    return out.str();
}

} // namespace revtest
