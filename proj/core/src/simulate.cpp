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

#include "revtest/simulate.hpp"

#include <algorithm>

namespace revtest {

Assignment Assignment::from_index(std::size_t num_lines, std::uint64_t encoded) {
    Assignment a(num_lines);
    for (std::size_t i = 0; i < num_lines && i < 64; ++i) {
        a.bits_[i] = static_cast<std::uint8_t>((encoded >> i) & 1u);
    }
    if (num_lines < 64 && (encoded >> num_lines) != 0) {
        throw Error("encoded value exceeds " + std::to_string(num_lines) + " lines");
    }
    return a;
}

Assignment Assignment::from_string(std::string_view bits) {
    Assignment a(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '0') {
            a.bits_[i] = 0;
        } else if (bits[i] == '1') {
            a.bits_[i] = 1;
        } else {
            throw Error(std::string("invalid bit character '") + bits[i] + "'");
        }
    }
    return a;
}

std::uint64_t Assignment::to_index() const {
    if (bits_.size() > 64) {
        throw Error("assignment too wide to encode as a 64-bit index");
    }
    std::uint64_t encoded = 0;
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        encoded |= static_cast<std::uint64_t>(bits_[i]) << i;
    }
    return encoded;
}

std::string Assignment::to_string() const {
    std::string out(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i]) {
            out[i] = '1';
        }
    }
    return out;
}

void apply_gate(const GateInstance& gate, Assignment& state) {
    std::uint32_t local = 0;
    for (std::size_t j = 0; j < gate.lines.size(); ++j) {
        if (state.bit(gate.lines[j])) {
            local |= 1u << j;
        }
    }
    const std::uint32_t out = gate.kind.eval(local);
    for (std::size_t j = 0; j < gate.lines.size(); ++j) {
        state.set_bit(gate.lines[j], (out >> j) & 1u);
    }
}

namespace {

void apply_gates_in_place(const Circuit& circuit, Assignment& state) {
    for (const GateInstance& gate : circuit.gates()) {
        apply_gate(gate, state);
    }
}

} // namespace

Assignment run(const Circuit& circuit, const Assignment& input, ConstantMode mode) {
    if (input.size() != circuit.num_lines()) {
        throw Error("input has " + std::to_string(input.size()) + " bits, circuit has " +
                    std::to_string(circuit.num_lines()) + " lines");
    }
    if (mode == ConstantMode::Enforce) {
        for (const auto& [line, value] : circuit.constants()) {
            if (input.bit(line) != value) {
                throw Error("input contradicts constant line " + std::to_string(line) +
                            " = " + std::to_string(value ? 1 : 0));
            }
        }
    }
    Assignment state = input;
    apply_gates_in_place(circuit, state);
    return state;
}

std::vector<unsigned> free_lines(const Circuit& circuit) {
    std::vector<unsigned> out;
    out.reserve(circuit.num_lines());
    for (unsigned line = 0; line < circuit.num_lines(); ++line) {
        if (!circuit.is_constant(line)) {
            out.push_back(line);
        }
    }
    return out;
}

Assignment assignment_with_constants(const Circuit& circuit, std::uint64_t free_bits) {
    Assignment a(circuit.num_lines());
    for (const auto& [line, value] : circuit.constants()) {
        a.set_bit(line, value);
    }
    unsigned i = 0;
    for (unsigned line : free_lines(circuit)) {
        a.set_bit(line, i < 64 && ((free_bits >> i) & 1u));
        ++i;
    }
    if (i < 64 && (free_bits >> i) != 0) {
        throw Error("free bits exceed " + std::to_string(i) + " free lines");
    }
    return a;
}

TruthTable truth_table(const Circuit& circuit) {
    if (circuit.num_lines() > kMaxExhaustiveLines) {
        throw Error("truth_table limited to " + std::to_string(kMaxExhaustiveLines) +
                    " lines, circuit has " + std::to_string(circuit.num_lines()));
    }
    const std::uint64_t rows = std::uint64_t{1} << circuit.num_lines();
    TruthTable table;
    table.num_lines = circuit.num_lines();
    table.rows.resize(rows);
    Assignment state(circuit.num_lines());
    for (std::uint64_t x = 0; x < rows; ++x) {
        state = Assignment::from_index(circuit.num_lines(), x);
        apply_gates_in_place(circuit, state);
        table.rows[x] = static_cast<std::uint32_t>(state.to_index());
    }
    return table;
}

bool TruthTable::is_permutation() const {
    std::vector<bool> seen(rows.size(), false);
    for (std::uint32_t y : rows) {
        if (y >= rows.size() || seen[y]) {
            return false;
        }
        seen[y] = true;
    }
    return true;
}

bool is_reversible(const Circuit& circuit) {
    return truth_table(circuit).is_permutation();
}

bool equivalent_on_lines(const Circuit& a, const Circuit& b, const LineMap& line_map,
                         bool fixed_constants) {
    std::vector<bool> seen_a(a.num_lines(), false);
    std::vector<bool> seen_b(b.num_lines(), false);
    for (const auto& [la, lb] : line_map) {
        if (la >= a.num_lines() || lb >= b.num_lines()) {
            throw Error("line map entry (" + std::to_string(la) + ", " + std::to_string(lb) +
                        ") out of range");
        }
        if (seen_a[la] || seen_b[lb]) {
            throw Error("line map is not injective");
        }
        seen_a[la] = seen_b[lb] = true;
    }

    const std::vector<unsigned> sweep =
        fixed_constants ? free_lines(a)
                        : [&] {
                              std::vector<unsigned> all(a.num_lines());
                              for (unsigned i = 0; i < a.num_lines(); ++i) {
                                  all[i] = i;
                              }
                              return all;
                          }();
    if (sweep.size() > kMaxExhaustiveLines) {
        throw Error("equivalence sweep limited to " + std::to_string(kMaxExhaustiveLines) +
                    " free lines");
    }

    const std::uint64_t patterns = std::uint64_t{1} << sweep.size();
    for (std::uint64_t bits = 0; bits < patterns; ++bits) {
        Assignment input_a(a.num_lines());
        if (fixed_constants) {
            for (const auto& [line, value] : a.constants()) {
                input_a.set_bit(line, value);
            }
        }
        for (std::size_t i = 0; i < sweep.size(); ++i) {
            input_a.set_bit(sweep[i], (bits >> i) & 1u);
        }

        Assignment input_b(b.num_lines());
        for (const auto& [line, value] : b.constants()) {
            input_b.set_bit(line, value);
        }
        for (const auto& [la, lb] : line_map) {
            input_b.set_bit(lb, input_a.bit(la));
        }

        const Assignment out_a = run(a, input_a, ConstantMode::Ignore);
        const Assignment out_b = run(b, input_b, ConstantMode::Ignore);
        for (const auto& [la, lb] : line_map) {
            if (out_a.bit(la) != out_b.bit(lb)) {
                return false;
            }
        }
    }
    return true;
}

} // namespace revtest
