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
#include <string>

#include "revtest/circuit.hpp"

namespace revtest {

/// Per-kind quantum costs, keyed by kind name. Lookups fall back to the
/// kind's built-in default, so an empty table already prices every built-in:
/// NOT=1, FEYNMAN=1, TOFFOLI(3)=5, FREDKIN(3)=5, PERES=4, MFRG=4, and the
/// standard no-ancilla 2^c+1 - 3 series for wider controlled gates.
/// Explicit entries override the defaults.
class CostTable {
public:
    CostTable() = default;

    void set(std::string kind_name, std::uint64_t cost);

    /// Cost of `kind`: explicit entry if present, else the kind's default.
    /// Throws Error when neither exists.
    std::uint64_t cost_of(const GateKind& kind) const;

    const std::map<std::string, std::uint64_t>& entries() const noexcept { return entries_; }

private:
    std::map<std::string, std::uint64_t> entries_;
};

/// Sum of per-gate costs over the whole circuit.
std::uint64_t quantum_cost(const Circuit& circuit, const CostTable& table = CostTable());

} // namespace revtest
