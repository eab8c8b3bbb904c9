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

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "revtest/commands.hpp"

namespace cli = revtest::cli;

int main(int argc, char** argv) {
    CLI::App app{"reversible-netlist online-testability toolkit"};
    app.require_subcommand(1);

    // parse
    std::string parse_path;
    CLI::App* parse = app.add_subcommand("parse", "parse a .real netlist and summarize it");
    parse->add_option("file", parse_path, ".real input")->required();

    // check
    std::string check_path;
    CLI::App* check = app.add_subcommand(
        "check", "verify reversibility, parity-zero and function preservation");
    check->add_option("file", check_path, ".real input")->required();

    // simulate
    cli::SimulateOptions simulate_options;
    CLI::App* simulate = app.add_subcommand("simulate", "evaluate a netlist on an input");
    simulate->add_option("file", simulate_options.path, ".real input")->required();
    CLI::Option* bits =
        simulate->add_option("--input", simulate_options.input_bits,
                             "input bits, line 0 first; '-' fills a declared constant");
    simulate->add_flag("--all", simulate_options.all, "print the full truth table");
    bits->excludes("--all");

    // transform
    std::string transform_in;
    std::string transform_out;
    CLI::App* transform_cmd =
        app.add_subcommand("transform", "rewrite a netlist into online-testable form");
    transform_cmd->add_option("input", transform_in, ".real input")->required();
    transform_cmd->add_option("output", transform_out, ".real output")->required();

    // faultsim
    cli::FaultsimOptions fault_options;
    std::size_t sample_count = 0;
    std::uint64_t seed_value = 0;
    CLI::App* faultsim =
        app.add_subcommand("faultsim", "single-fault injection campaign at block cuts");
    faultsim->add_option("file", fault_options.path, ".real input")->required();
    faultsim->add_flag("--transform", fault_options.transform_first,
                       "transform a plain netlist before the campaign");
    CLI::Option* exhaustive_flag =
        faultsim->add_flag("--exhaustive", "sweep all data inputs (default)");
    CLI::Option* samples_opt = faultsim->add_option(
        "--samples", sample_count, "number of sampled (site, input) trials");
    CLI::Option* seed_opt =
        faultsim->add_option("--seed", seed_value, "seed for sampled mode");
    samples_opt->excludes(exhaustive_flag);
    samples_opt->needs(seed_opt);
    faultsim->add_flag("--csv", fault_options.csv, "emit per-trial CSV before the summary");
    faultsim->add_flag("--sabotage", fault_options.sabotage,
                       "drop the checker's last gate first (negative control)");

    // bench
    cli::BenchOptions bench_options;
    std::int64_t literature_n = 0;
    CLI::App* bench =
        app.add_subcommand("bench", "reproduce the golden table over the fixture corpus");
    bench->add_option("--corpus", bench_options.corpus_dir, "fixture directory")
        ->capture_default_str();
    bench->add_flag("--csv", bench_options.csv, "machine-readable output");
    CLI::Option* lit_opt = bench->add_option(
        "--lit-n", literature_n, "evaluate literature formula columns at this block count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? cli::kExitSuccess : cli::kExitUsage;
    }

    if (parse->parsed()) {
        return cli::cmd_parse(parse_path, std::cout, std::cerr);
    }
    if (check->parsed()) {
        return cli::cmd_check(check_path, std::cout, std::cerr);
    }
    if (simulate->parsed()) {
        if (!simulate_options.all && bits->count() == 0) {
            std::cerr << "simulate: pass --input BITS or --all\n";
            return cli::kExitUsage;
        }
        return cli::cmd_simulate(simulate_options, std::cout, std::cerr);
    }
    if (transform_cmd->parsed()) {
        return cli::cmd_transform(transform_in, transform_out, std::cout, std::cerr);
    }
    if (faultsim->parsed()) {
        if (samples_opt->count() > 0) {
            fault_options.samples = sample_count;
            fault_options.seed = seed_value;
        }
        return cli::cmd_faultsim(fault_options, std::cout, std::cerr);
    }
    if (bench->parsed()) {
        if (lit_opt->count() > 0) {
            bench_options.literature_n = literature_n;
        }
        return cli::cmd_bench(bench_options, std::cout, std::cerr);
    }
    return cli::kExitUsage;
}
