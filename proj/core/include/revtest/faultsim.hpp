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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "revtest/simulate.hpp"
#include "revtest/testability.hpp"

namespace revtest {

/// A single-fault detection campaign over a testable circuit. The fault
/// model is a transient bit flip on one wire of a block's internal cut;
/// faults elsewhere (primary outputs, checker wires, multi-bit upsets) are
/// outside the detection guarantee.
struct Campaign {
    enum class Inputs { Exhaustive, Sampled };

    /// Sites to inject at; empty means every cut wire of every block.
    std::vector<FaultSite> sites;
    Inputs inputs = Inputs::Exhaustive;
    std::size_t samples = 0;            // Sampled only
    std::optional<std::uint64_t> seed;  // required for Sampled
};

struct Trial {
    FaultSite site;
    Assignment input;
    bool detected = false;
};

struct CoverageReport {
    std::size_t total_trials = 0;
    std::size_t detected = 0;
    std::vector<Trial> undetected; // witnesses
    std::vector<Trial> trials;     // every trial, in execution order
    std::optional<std::uint64_t> seed;

    double coverage() const {
        return total_trials == 0 ? 0.0
                                 : static_cast<double>(detected) /
                                       static_cast<double>(total_trials);
    }
    bool full_coverage() const { return detected == total_trials && total_trials > 0; }
};

/// Runs the circuit with one bit flipped at `site`'s cut: simulates up to
/// and including the block's TRG(R), flips the designated wire, and
/// continues. The returned assignment includes the error line E.
Assignment inject(const TestableCircuit& tc, FaultSite site, const Assignment& input);

/// Exhaustive mode sweeps every assignment of the free data lines (at most
/// kMaxExhaustiveLines of them) for every site; sampled mode draws
/// `samples` (site, input) pairs from the explicit seed. Same campaign,
/// same report, bit for bit.
CoverageReport run_campaign(const TestableCircuit& tc, const Campaign& campaign);

/// Injects two flips at the same block's cut and reports whether E = 1.
/// Two flips cancel in the block parity, so this is expected to return
/// false; it exists to document the single-error scope of the scheme.
bool double_fault_probe(const TestableCircuit& tc, FaultSite first, FaultSite second,
                        const Assignment& input);

/// Negative control: a copy of `tc` with the checker's last MFRG removed,
/// which leaves the blocks feeding that gate undetected. Requires at least
/// two blocks.
TestableCircuit drop_last_checker_gate(const TestableCircuit& tc);

/// CSV form, one `block,wire,input,detected` row per trial.
std::string to_csv(const CoverageReport& report);

/// Human-readable summary block: trial totals, coverage, seed, witnesses.
std::string summary(const CoverageReport& report);

} // namespace revtest
