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
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "revtest/error.hpp"

namespace revtest {

/// Evaluation rule of a gate kind. Built-in families use closed forms;
/// user-defined kinds fall back to an explicit permutation table. The
/// TrgWrapper rule lifts an n-bit gate to n+1 bits with a parity output.
enum class GateRule : std::uint8_t {
    Not,
    Feynman,
    Toffoli,
    Fredkin,
    Peres,
    Mfrg,
    Identity,
    TrgWrapper,
    Table,
};

/// An immutable reversible gate kind: a name, an arity and a bijection on
/// arity-bit vectors. Within a gate the i-th line of its definition order
/// (A, B, C, ...) is bit i of the packed value, so A is the LSB.
///
/// Built-in semantics:
///   NOT        (A)       -> (~A)
///   FEYNMAN    (A,B)     -> (A, A^B)
///   TOFFOLI(k) (C...,T)  -> (C..., T ^ AND(C...)), k >= 2 lines
///   FREDKIN(k) (C...,B,C)-> controls then swap of the last two lines, k >= 3
///   PERES      (A,B,C)   -> (A, A^B, (A&B)^C)
///   MFRG       (A,B,C)   -> (A, ~A&B ^ A&C, ~A&C ^ A&B)
///
/// MFRG computes the same permutation as the 3-line FREDKIN; the two kinds
/// differ in name and quantum cost (5 vs 4). TOFFOLI(2) is canonicalized to
/// FEYNMAN so that serialization round-trips are stable.
class GateKind {
public:
    /// Looks up a built-in family by name (NOT, FEYNMAN, TOFFOLI, FREDKIN,
    /// PERES, MFRG). TOFFOLI accepts arity 2..16, FREDKIN 3..16; the other
    /// families have a fixed arity. Throws Error on an unknown name or an
    /// arity the family does not support.
    static GateKind builtin(std::string_view family, unsigned arity);

    /// The n-bit identity gate (used as the S gate of a testable block).
    static GateKind identity(unsigned arity);

    /// A user-defined kind backed by an explicit output table. `table` must
    /// have 2^arity entries, each < 2^arity; bijectivity is not checked here
    /// (see verify_bijective). A kind without a quantum cost can only be
    /// priced through an explicit CostTable entry.
    static GateKind from_table(std::string name, unsigned arity,
                               std::vector<std::uint32_t> table,
                               std::optional<std::uint64_t> quantum_cost = std::nullopt);

    /// Wraps an n-bit gate R into the (n+1)-bit form
    ///   (I_1..I_n, c) -> (O_1..O_n, c ^ O_1 ^ ... ^ O_n).
    /// Callers normally go through make_trg, which also validates the base.
    static GateKind trg_wrapper(const GateKind& base);

    const std::string& name() const noexcept { return name_; }
    unsigned arity() const noexcept { return arity_; }
    GateRule rule() const noexcept { return rule_; }

    bool has_quantum_cost() const noexcept { return cost_.has_value(); }
    /// Default quantum cost of this kind. Throws Error if the kind has none.
    std::uint64_t quantum_cost() const;

    /// Applies the gate to a packed bit vector (bit i = line i).
    std::uint32_t eval(std::uint32_t bits) const;

    bool is_trg() const noexcept { return rule_ == GateRule::TrgWrapper; }
    /// Base gate of a TrgWrapper kind. Throws Error otherwise.
    const GateKind& trg_base() const;

    /// Structural equality: rule, arity, and table contents / wrapped base
    /// where applicable. Kinds with identical permutations but different
    /// rules (FREDKIN vs MFRG) compare unequal.
    bool operator==(const GateKind& other) const;
    bool operator!=(const GateKind& other) const { return !(*this == other); }

private:
    GateKind(GateRule rule, unsigned arity, std::string name,
             std::optional<std::uint64_t> cost);

    GateRule rule_;
    unsigned arity_;
    std::string name_;
    std::optional<std::uint64_t> cost_;
    std::shared_ptr<const GateKind> base_;                        // TrgWrapper
    std::shared_ptr<const std::vector<std::uint32_t>> table_;    // Table
};

/// Exhaustively checks that the kind's semantics is a bijection.
/// Requires arity <= 16.
bool verify_bijective(const GateKind& kind);

/// Full output table of the kind: entry x is eval(x). Requires arity <= 16.
std::vector<std::uint32_t> output_table(const GateKind& kind);

} // namespace revtest
