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

#include "revtest/gate.hpp"

#include <bit>
#include <utility>

namespace revtest {

namespace {

constexpr unsigned kMaxArity = 16;

// Standard no-ancilla cost of a multi-control Toffoli with c controls:
// 1, 1, 5, 13, 29, 61, ... = 2^(c+1) - 3 for c >= 2.
std::uint64_t multicontrol_cost(unsigned controls) {
    if (controls <= 1) {
        return 1;
    }
    return (std::uint64_t{1} << (controls + 1)) - 3;
}

} // namespace

GateKind::GateKind(GateRule rule, unsigned arity, std::string name,
                   std::optional<std::uint64_t> cost)
    : rule_(rule), arity_(arity), name_(std::move(name)), cost_(cost) {}

GateKind GateKind::builtin(std::string_view family, unsigned arity) {
    if (family == "NOT") {
        if (arity != 1) {
            throw Error("NOT gate has arity 1, requested " + std::to_string(arity));
        }
        return {GateRule::Not, 1, "NOT", 1};
    }
    if (family == "FEYNMAN") {
        if (arity != 2) {
            throw Error("FEYNMAN gate has arity 2, requested " + std::to_string(arity));
        }
        return {GateRule::Feynman, 2, "FEYNMAN", 1};
    }
    if (family == "TOFFOLI") {
        if (arity < 2 || arity > kMaxArity) {
            throw Error("TOFFOLI arity must be in 2.." + std::to_string(kMaxArity) +
                        ", requested " + std::to_string(arity));
        }
        if (arity == 2) {
            return builtin("FEYNMAN", 2); // same permutation, same cost
        }
        return {GateRule::Toffoli, arity, "TOFFOLI" + std::to_string(arity),
                multicontrol_cost(arity - 1)};
    }
    if (family == "FREDKIN") {
        if (arity < 3 || arity > kMaxArity) {
            throw Error("FREDKIN arity must be in 3.." + std::to_string(kMaxArity) +
                        ", requested " + std::to_string(arity));
        }
        // Priced like a multi-control Toffoli of the same arity (5 at arity 3).
        return {GateRule::Fredkin, arity, "FREDKIN" + std::to_string(arity),
                multicontrol_cost(arity - 1)};
    }
    if (family == "PERES") {
        if (arity != 3) {
            throw Error("PERES gate has arity 3, requested " + std::to_string(arity));
        }
        return {GateRule::Peres, 3, "PERES", 4};
    }
    if (family == "MFRG") {
        if (arity != 3) {
            throw Error("MFRG gate has arity 3, requested " + std::to_string(arity));
        }
        return {GateRule::Mfrg, 3, "MFRG", 4};
    }
    throw Error("unknown gate family '" + std::string(family) + "'");
}

GateKind GateKind::identity(unsigned arity) {
    if (arity == 0 || arity > kMaxArity) {
        throw Error("identity arity must be in 1.." + std::to_string(kMaxArity));
    }
    return {GateRule::Identity, arity, "ID" + std::to_string(arity), 0};
}

GateKind GateKind::from_table(std::string name, unsigned arity,
                              std::vector<std::uint32_t> table,
                              std::optional<std::uint64_t> quantum_cost) {
    if (arity == 0 || arity > kMaxArity) {
        throw Error("table gate arity must be in 1.." + std::to_string(kMaxArity));
    }
    const std::size_t rows = std::size_t{1} << arity;
    if (table.size() != rows) {
        throw Error("table for arity " + std::to_string(arity) + " requires " +
                    std::to_string(rows) + " rows, got " + std::to_string(table.size()));
    }
    for (std::uint32_t value : table) {
        if (value >= rows) {
            throw Error("table entry " + std::to_string(value) + " out of range for arity " +
                        std::to_string(arity));
        }
    }
    GateKind kind(GateRule::Table, arity, std::move(name), quantum_cost);
    kind.table_ = std::make_shared<const std::vector<std::uint32_t>>(std::move(table));
    return kind;
}

GateKind GateKind::trg_wrapper(const GateKind& base) {
    if (base.arity() + 1 > kMaxArity) {
        throw Error("TRG base arity must be <= " + std::to_string(kMaxArity - 1));
    }
    // Expansion is the base gate plus one parity-accumulating FEYNMAN per
    // data line, so the default cost is cost(base) + arity(base).
    std::optional<std::uint64_t> cost;
    if (base.has_quantum_cost()) {
        cost = base.quantum_cost() + base.arity();
    }
    GateKind kind(GateRule::TrgWrapper, base.arity() + 1, "TRG[" + base.name() + "]", cost);
    kind.base_ = std::make_shared<const GateKind>(base);
    return kind;
}

std::uint64_t GateKind::quantum_cost() const {
    if (!cost_) {
        throw Error("gate kind '" + name_ + "' has no quantum cost");
    }
    return *cost_;
}

const GateKind& GateKind::trg_base() const {
    if (!is_trg()) {
        throw Error("gate kind '" + name_ + "' is not a TRG wrapper");
    }
    return *base_;
}

std::uint32_t GateKind::eval(std::uint32_t bits) const {
    const std::uint32_t mask = (arity_ >= 32) ? ~0u : ((1u << arity_) - 1);
    if ((bits & ~mask) != 0) {
        throw Error("input " + std::to_string(bits) + " exceeds arity " +
                    std::to_string(arity_) + " of gate '" + name_ + "'");
    }
    switch (rule_) {
    case GateRule::Not:
        return bits ^ 1u;
    case GateRule::Feynman:
        return (bits & 1u) ? bits ^ 2u : bits;
    case GateRule::Toffoli: {
        const std::uint32_t controls = (1u << (arity_ - 1)) - 1;
        return (bits & controls) == controls ? bits ^ (1u << (arity_ - 1)) : bits;
    }
    case GateRule::Fredkin:
    case GateRule::Mfrg: {
        const std::uint32_t controls = (1u << (arity_ - 2)) - 1;
        if ((bits & controls) != controls) {
            return bits;
        }
        const unsigned lo = arity_ - 2;
        const unsigned hi = arity_ - 1;
        const std::uint32_t b = (bits >> lo) & 1u;
        const std::uint32_t c = (bits >> hi) & 1u;
        if (b == c) {
            return bits;
        }
        return bits ^ (1u << lo) ^ (1u << hi);
    }
    case GateRule::Peres: {
        const std::uint32_t a = bits & 1u;
        const std::uint32_t b = (bits >> 1) & 1u;
        const std::uint32_t c = (bits >> 2) & 1u;
        return a | ((a ^ b) << 1) | (((a & b) ^ c) << 2);
    }
    case GateRule::Identity:
        return bits;
    case GateRule::TrgWrapper: {
        const unsigned n = base_->arity();
        const std::uint32_t data = bits & ((1u << n) - 1);
        const std::uint32_t carried = (bits >> n) & 1u;
        const std::uint32_t out = base_->eval(data);
        const std::uint32_t parity = static_cast<std::uint32_t>(std::popcount(out)) & 1u;
        return out | ((carried ^ parity) << n);
    }
    case GateRule::Table:
        return (*table_)[bits];
    }
    throw Error("unhandled gate rule");
}

bool GateKind::operator==(const GateKind& other) const {
    if (rule_ != other.rule_ || arity_ != other.arity_) {
        return false;
    }
    switch (rule_) {
    case GateRule::Table:
        return name_ == other.name_ && *table_ == *other.table_;
    case GateRule::TrgWrapper:
        return *base_ == *other.base_;
    default:
        return true;
    }
}

std::vector<std::uint32_t> output_table(const GateKind& kind) {
    if (kind.arity() > kMaxArity) {
        throw Error("output_table requires arity <= " + std::to_string(kMaxArity));
    }
    const std::uint32_t rows = 1u << kind.arity();
    std::vector<std::uint32_t> table(rows);
    for (std::uint32_t x = 0; x < rows; ++x) {
        table[x] = kind.eval(x);
    }
    return table;
}

bool verify_bijective(const GateKind& kind) {
    const std::uint32_t rows = 1u << kind.arity();
    std::vector<bool> seen(rows, false);
    for (std::uint32_t x = 0; x < rows; ++x) {
        const std::uint32_t y = kind.eval(x);
        if (y >= rows || seen[y]) {
            return false;
        }
        seen[y] = true;
    }
    return true;
}

} // namespace revtest
