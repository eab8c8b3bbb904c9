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

#include "revtest/circuit.hpp"

#include <algorithm>
#include <utility>

namespace revtest {

Circuit::Circuit(unsigned num_lines) : num_lines_(num_lines) {
    if (num_lines == 0) {
        throw Error("circuit needs at least one line");
    }
}

void Circuit::check_line(unsigned line) const {
    if (line >= num_lines_) {
        throw Error("line index " + std::to_string(line) + " out of range, circuit has " +
                    std::to_string(num_lines_) + " lines");
    }
}

void Circuit::add_gate(GateKind kind, std::vector<unsigned> lines) {
    if (lines.size() != kind.arity()) {
        throw Error("gate '" + kind.name() + "' has arity " + std::to_string(kind.arity()) +
                    " but got " + std::to_string(lines.size()) + " lines");
    }
    for (std::size_t i = 0; i < lines.size(); ++i) {
        check_line(lines[i]);
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            if (lines[i] == lines[j]) {
                throw Error("gate '" + kind.name() + "' uses line " +
                            std::to_string(lines[i]) + " twice");
            }
        }
    }
    gates_.push_back({std::move(kind), std::move(lines)});
}

void Circuit::add_gate(const GateInstance& instance) {
    add_gate(instance.kind, instance.lines);
}

void Circuit::set_constant(unsigned line, bool value) {
    check_line(line);
    constants_[line] = value;
}

void Circuit::clear_constant(unsigned line) {
    constants_.erase(line);
}

void Circuit::set_garbage(unsigned line, bool garbage) {
    check_line(line);
    if (garbage) {
        garbage_.insert(line);
    } else {
        garbage_.erase(line);
    }
}

void Circuit::set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != num_lines_) {
        throw Error("expected " + std::to_string(num_lines_) + " labels, got " +
                    std::to_string(labels.size()));
    }
    labels_ = std::move(labels);
}

std::string Circuit::label(unsigned line) const {
    check_line(line);
    if (line < labels_.size() && !labels_[line].empty()) {
        return labels_[line];
    }
    return "x" + std::to_string(line + 1);
}

bool Circuit::operator==(const Circuit& other) const {
    return num_lines_ == other.num_lines_ && gates_ == other.gates_ &&
           constants_ == other.constants_ && garbage_ == other.garbage_;
}

} // namespace revtest
