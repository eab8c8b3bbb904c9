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
#include <string>
#include <vector>

#include "revtest/circuit.hpp"

namespace revtest {

/// Exhaustive operations (truth_table, is_reversible) refuse circuits wider
/// than this.
inline constexpr unsigned kMaxExhaustiveLines = 20;

/// One value per circuit line. Bit-order convention used throughout the
/// toolkit: line 0 is the least-significant bit of an encoded index.
class Assignment {
public:
    Assignment() = default;
    explicit Assignment(std::size_t num_lines) : bits_(num_lines, 0) {}

    static Assignment from_index(std::size_t num_lines, std::uint64_t encoded);
    /// Parses "0101..." with the line-0 bit first.
    static Assignment from_string(std::string_view bits);

    /// Packs into an index (size() <= 64).
    std::uint64_t to_index() const;
    /// "0101..." with the line-0 bit first.
    std::string to_string() const;

    std::size_t size() const noexcept { return bits_.size(); }
    bool bit(std::size_t line) const { return bits_.at(line) != 0; }
    void set_bit(std::size_t line, bool value) { bits_.at(line) = value ? 1 : 0; }
    void flip_bit(std::size_t line) { bits_.at(line) ^= 1; }

    bool operator==(const Assignment& other) const = default;

private:
    std::vector<std::uint8_t> bits_;
};

/// All 2^num_lines output rows, indexed by encoded input.
struct TruthTable {
    unsigned num_lines = 0;
    std::vector<std::uint32_t> rows;

    bool is_permutation() const;
};

/// Whether run() honors the circuit's declared constant inputs.
/// Enforce rejects inputs that contradict a declared constant; Ignore
/// evaluates the circuit on the raw input (full domain).
enum class ConstantMode { Ignore, Enforce };

/// Applies one gate in place; untouched lines pass through.
void apply_gate(const GateInstance& gate, Assignment& state);

/// Applies each gate in order; untouched lines pass through.
Assignment run(const Circuit& circuit, const Assignment& input, ConstantMode mode);

/// Lines without a declared constant, in increasing order.
std::vector<unsigned> free_lines(const Circuit& circuit);

/// Builds a full-width input: constants at their declared values, the i-th
/// free line from bit i of `free_bits`.
Assignment assignment_with_constants(const Circuit& circuit, std::uint64_t free_bits);

/// All rows of run() over the full input domain. Requires
/// num_lines <= kMaxExhaustiveLines.
TruthTable truth_table(const Circuit& circuit);

/// True iff the circuit's truth table is a permutation.
bool is_reversible(const Circuit& circuit);

/// Pairs (line in a, line in b); both components must be duplicate-free.
using LineMap = std::vector<std::pair<unsigned, unsigned>>;

/// Sweeps every assignment of a's lines (honoring a's constants when
/// fixed_constants is set), feeds the mapped image into b with b's constants
/// auto-filled and unmapped free lines at 0, and compares outputs on the
/// mapped pairs.
bool equivalent_on_lines(const Circuit& a, const Circuit& b, const LineMap& line_map,
                         bool fixed_constants = true);

} // namespace revtest
