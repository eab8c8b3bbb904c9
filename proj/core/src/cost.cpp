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

#include "revtest/cost.hpp"

#include <utility>

namespace revtest {

void CostTable::set(std::string kind_name, std::uint64_t cost) {
    entries_[std::move(kind_name)] = cost;
}

std::uint64_t CostTable::cost_of(const GateKind& kind) const {
    if (auto it = entries_.find(kind.name()); it != entries_.end()) {
        return it->second;
    }
    if (kind.has_quantum_cost()) {
        return kind.quantum_cost();
    }
    throw Error("no quantum cost entry for gate kind '" + kind.name() + "'");
}

std::uint64_t quantum_cost(const Circuit& circuit, const CostTable& table) {
    std::uint64_t total = 0;
    for (const GateInstance& gate : circuit.gates()) {
        total += table.cost_of(gate.kind);
    }
    return total;
}

} // namespace revtest
