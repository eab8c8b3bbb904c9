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

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "revtest/circuit.hpp"
#include "revtest/cost.hpp"
#include "revtest/real_io.hpp"
#include "revtest/simulate.hpp"

namespace revtest {

/// Lifts an n-bit gate R to the (n+1)-bit testable form
///   (I_1..I_n, c) -> (O_1..O_n, c ^ O_1 ^ ... ^ O_n),
/// so that with c = 0 the extra output is the parity of the data outputs.
/// The base must be bijective with arity <= 15.
GateKind make_trg(const GateKind& base);

/// A testable block: TRG(R) cascaded with TRG(S) on the same n+1 lines,
/// where S is the n-bit identity. Fault-free, the block maps (I, c) to
/// (R(I), c), so a constant-0 parity line comes out 0 unless a single-bit
/// error occurred at the internal cut.
struct TestableBlock {
    GateKind base;
    std::vector<unsigned> data_lines;
    unsigned parity_line = 0;

    unsigned arity() const { return base.arity(); }
    /// Number of wires at the internal cut: the data outputs plus parity.
    unsigned cut_wire_count() const { return base.arity() + 1; }

    std::vector<unsigned> block_lines() const;
    GateInstance trg_r() const;
    GateInstance trg_s() const;
};

TestableBlock make_tb(const GateKind& base, std::vector<unsigned> data_lines,
                      unsigned parity_line);

/// Standalone circuit of just the block's two gates over max-line+1 lines,
/// with the parity line declared constant 0.
Circuit tb_circuit(const TestableBlock& block);

/// One bit at a block's internal cut: wire < arity() addresses a data
/// output of TRG(R), wire == arity() the parity wire.
struct FaultSite {
    std::size_t block = 0;
    unsigned wire = 0;

    bool operator==(const FaultSite&) const = default;
};

/// Cascade of n-1 MFRG gates folding n block parity bits into one error
/// bit: gate i takes the running bit on its first input, a constant-1 line
/// on its second, and the next parity line on its third, leaving
/// e_running OR e_next on that third line. For n = 1 the list is empty and
/// the error output is the single parity line itself.
std::vector<GateInstance> make_checker(const std::vector<unsigned>& parity_lines,
                                       const std::vector<unsigned>& constant_one_lines);

/// Standalone n-input checker: lines [0..n) are the parity inputs, lines
/// [n..2n-1) the constant-1 lines; garbage is every line except the error
/// output (line n-1).
Circuit checker_circuit(unsigned n);

/// A transformed circuit with its construction provenance. `circuit` holds
/// the logical gate list (one TRG wrapper gate per TRG, so the gate count
/// is exactly 3n-1 for n original gates); expand() lowers the wrappers to
/// primitive gates for serialization and interchange.
///
/// Line layout: original lines first, then one parity line per block in
/// block order, then the checker constant-1 lines. The error output E is
/// the last parity line.
struct TestableCircuit {
    Circuit circuit;
    Circuit original;
    std::vector<TestableBlock> blocks;
    std::vector<GateInstance> checker_gates;
    unsigned error_line = 0;

    unsigned data_line_count() const { return original.num_lines(); }

    /// Fault sites of one block's cut, or of all blocks.
    std::vector<FaultSite> cut_points(std::size_t block) const;
    std::vector<FaultSite> all_fault_sites() const;
};

/// Converts each gate into a testable block on a fresh constant-0 parity
/// line and folds the parity lines through the MFRG checker. The data-line
/// function is preserved; gate count becomes 3n-1, garbage grows by
/// 2(n-1), and n + (n-1) constant inputs are added.
TestableCircuit transform(const Circuit& circuit);

/// Lowers the logical gate list to primitive gates: each TRG(R) becomes R
/// followed by one parity-accumulating FEYNMAN per data line, each TRG(S)
/// the FEYNMAN fan-in alone. Checker gates are kept as-is.
Circuit expand(const TestableCircuit& tc);

/// Serializes via expand() with `# tb <i>` / `# checker` provenance marks.
RealDocument testable_to_document(const TestableCircuit& tc);
std::string emit_real(const TestableCircuit& tc);

/// Rebuilds a TestableCircuit from a document produced by emit_real(tc).
/// Requires the provenance marks and the canonical line layout; throws
/// Error when the document does not carry a recognizable expansion.
TestableCircuit reconstruct_testable(const RealDocument& doc);

/// Cost-comparison designs reported alongside the MFRG construction.
enum class Design { Proposed, Vasudevan06, Thapliyal07, Hasan09 };

std::string_view design_name(Design design);

struct FormulaCosts {
    std::int64_t gates = 0;
    std::int64_t garbage = 0;
    std::optional<std::int64_t> quantum_cost;
};

/// Closed-form costs of an n-block checker / full construction per design.
/// Proposed: checker (n-1, 2(n-1), 4(n-1)), circuit (3n-1, 2(n-1)).
/// Vasudevan06: checker (6n, 8n, -), circuit (8n, 10n).
/// Thapliyal07: checker (6n, 8n, 30n), circuit (8n, 10n).
/// Hasan09: checker (2n, 3n, 6n), circuit (4n, 5n).
FormulaCosts checker_cost_formula(Design design, std::int64_t blocks);
FormulaCosts circuit_cost_formula(Design design, std::int64_t blocks);

struct Tally {
    std::size_t gates = 0;
    std::size_t garbage = 0;
    std::size_t constant_inputs = 0;
    std::uint64_t quantum_cost = 0;
};

struct CostReport {
    std::size_t block_count = 0;
    Tally original;
    Tally transformed;
    std::array<std::pair<Design, FormulaCosts>, 4> checker_designs{};
    std::array<std::pair<Design, FormulaCosts>, 4> circuit_designs{};
};

/// Structural tallies of the transform plus the literature formulas
/// evaluated at n = block count. Tallies report total garbage; the formula
/// rows report construction-added garbage, so transformed.garbage equals
/// original.garbage plus the proposed formula's garbage term.
CostReport count_report(const TestableCircuit& tc, const CostTable& table = CostTable());

} // namespace revtest
