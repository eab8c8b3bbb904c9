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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace revtest::cli {

/// Shared exit-code contract of all subcommands.
inline constexpr int kExitSuccess = 0;
inline constexpr int kExitMismatch = 1; // expectation mismatch or fault escape
inline constexpr int kExitUsage = 2;    // usage, I/O or parse error

/// Parses a .real file and prints a netlist summary.
int cmd_parse(const std::string& path, std::ostream& out, std::ostream& err);

struct SimulateOptions {
    std::string path;
    /// Input bits, line 0 first; '-' takes a declared constant's value.
    std::string input_bits;
    /// Print the full truth table instead (guarded by the line limit).
    bool all = false;
};
int cmd_simulate(const SimulateOptions& options, std::ostream& out, std::ostream& err);

/// Runs reversibility, per-block parity-zero, and function-preservation
/// checks. Files without provenance marks are transformed on the fly.
int cmd_check(const std::string& path, std::ostream& out, std::ostream& err);

/// Transforms a netlist into its online-testable form and writes it with
/// provenance marks.
int cmd_transform(const std::string& input_path, const std::string& output_path,
                  std::ostream& out, std::ostream& err);

struct FaultsimOptions {
    std::string path;
    /// Transform a plain netlist instead of requiring provenance marks.
    bool transform_first = false;
    /// Sampled mode when set; exhaustive otherwise.
    std::optional<std::size_t> samples;
    std::optional<std::uint64_t> seed;
    bool csv = false;
    /// Negative control: drop the checker's last gate before the campaign.
    bool sabotage = false;
};
int cmd_faultsim(const FaultsimOptions& options, std::ostream& out, std::ostream& err);

struct BenchOptions {
    std::string corpus_dir = "corpus";
    bool csv = false;
    /// Block count used for the literature formula columns; defaults to
    /// each fixture's own gate count.
    std::optional<std::int64_t> literature_n;
};
int cmd_bench(const BenchOptions& options, std::ostream& out, std::ostream& err);

/// One golden-table row of the shipped benchmark corpus.
struct BenchFixture {
    std::string name;
    std::string file;
    std::size_t gates_orig = 0;
    std::size_t garbage_orig = 0;
    std::size_t gates_transformed = 0;
    std::size_t garbage_total = 0;
};

/// The twelve-fixture golden table. Every row satisfies
/// gates_transformed = 3*gates_orig - 1 and
/// garbage_total = garbage_orig + 2*(gates_orig - 1); the accessor
/// validates this on first use.
const std::vector<BenchFixture>& bench_fixtures();

} // namespace revtest::cli
