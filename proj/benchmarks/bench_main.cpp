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

#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

#include "revtest/faultsim.hpp"

namespace {

revtest::Circuit load_fixture(const std::string& name) {
    std::ifstream in(std::string(REVTEST_CORPUS_DIR) + "/" + name);
    return revtest::parse_real(in);
}

void BM_ParseEmitRoundTrip(benchmark::State& state) {
    std::ifstream in(std::string(REVTEST_CORPUS_DIR) + "/mod5adder.real");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    for (auto _ : state) {
        benchmark::DoNotOptimize(revtest::emit_real(revtest::parse_real(text)));
    }
}
BENCHMARK(BM_ParseEmitRoundTrip);

void BM_Transform(benchmark::State& state) {
    const revtest::Circuit circuit = load_fixture("ham7.real");
    for (auto _ : state) {
        benchmark::DoNotOptimize(revtest::transform(circuit));
    }
}
BENCHMARK(BM_Transform);

void BM_TruthTableTransformed317(benchmark::State& state) {
    const revtest::TestableCircuit tc = revtest::transform(load_fixture("3_17.real"));
    for (auto _ : state) {
        benchmark::DoNotOptimize(revtest::truth_table(tc.circuit));
    }
}
BENCHMARK(BM_TruthTableTransformed317);

void BM_ExhaustiveCampaign317(benchmark::State& state) {
    const revtest::TestableCircuit tc = revtest::transform(load_fixture("3_17.real"));
    for (auto _ : state) {
        benchmark::DoNotOptimize(revtest::run_campaign(tc, {}));
    }
}
BENCHMARK(BM_ExhaustiveCampaign317);

void BM_IsReversibleTransformed(benchmark::State& state) {
    const revtest::TestableCircuit tc = revtest::transform(load_fixture("4mod5.real"));
    for (auto _ : state) {
        benchmark::DoNotOptimize(revtest::is_reversible(tc.circuit));
    }
}
BENCHMARK(BM_IsReversibleTransformed);

} // namespace

BENCHMARK_MAIN();
