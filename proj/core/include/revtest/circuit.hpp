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
#include <map>
#include <set>
#include <string>
#include <vector>

#include "revtest/gate.hpp"

namespace revtest {

/// One gate applied to an ordered list of distinct circuit lines. The j-th
/// entry of `lines` carries the gate's j-th definition-order input.
struct GateInstance {
    GateKind kind;
    std::vector<unsigned> lines;

    bool operator==(const GateInstance& other) const {
        return kind == other.kind && lines == other.lines;
    }
    bool operator!=(const GateInstance& other) const { return !(*this == other); }
};

/// A gate-level reversible netlist: a fixed set of lines, an ordered gate
/// list, constant-input and garbage-output annotations, and optional
/// per-line labels. As a composition of bijections the whole circuit maps
/// num_lines-bit vectors bijectively.
///
/// Intended use is build-then-share: populate via the add/set methods, then
/// treat the value as immutable. All query methods are const and all
/// pipeline functions in this library take circuits by const reference.
class Circuit {
public:
    explicit Circuit(unsigned num_lines);

    unsigned num_lines() const noexcept { return num_lines_; }
    const std::vector<GateInstance>& gates() const noexcept { return gates_; }
    std::size_t gate_count() const noexcept { return gates_.size(); }

    /// Appends a gate. Line indices must be distinct, in range, and exactly
    /// kind.arity() many.
    void add_gate(GateKind kind, std::vector<unsigned> lines);
    void add_gate(const GateInstance& instance);

    void set_constant(unsigned line, bool value);
    void clear_constant(unsigned line);
    void set_garbage(unsigned line, bool garbage = true);

    const std::map<unsigned, bool>& constants() const noexcept { return constants_; }
    const std::set<unsigned>& garbage() const noexcept { return garbage_; }
    bool is_constant(unsigned line) const { return constants_.contains(line); }
    bool is_garbage(unsigned line) const { return garbage_.contains(line); }

    /// Optional per-line names; empty when unset, otherwise num_lines long.
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    void set_labels(std::vector<std::string> labels);
    /// Label of `line`, or a generated "x<line+1>" fallback.
    std::string label(unsigned line) const;

    /// Structural equality: lines, gate sequence, constants and garbage.
    /// Labels are presentation metadata and do not participate.
    bool operator==(const Circuit& other) const;
    bool operator!=(const Circuit& other) const { return !(*this == other); }

private:
    void check_line(unsigned line) const;

    unsigned num_lines_;
    std::vector<GateInstance> gates_;
    std::map<unsigned, bool> constants_;
    std::set<unsigned> garbage_;
    std::vector<std::string> labels_;
};

} // namespace revtest
