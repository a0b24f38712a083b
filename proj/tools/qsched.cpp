// Copyright 2026 The qsched Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "commands.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

namespace {

// QSCHED_THREADS overrides the default worker count; --threads overrides both.
int default_threads() {
    if (const char *env = std::getenv("QSCHED_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    using namespace qsched::cli;

    CLI::App app{"State-vector quantum circuit simulator with baseline and "
                 "reduced-iteration gate schedulers"};
    app.require_subcommand(1);
    int threads = default_threads();
    app.add_option("--threads", threads, "Worker threads (0 = all available)")
        ->check(CLI::NonNegativeNumber);

    GenConfig gen;
    auto *gen_cmd = app.add_subcommand("gen", "Write a generated circuit in text format");
    gen_cmd->add_option("spec", gen.spec, "qft:N | stream:N | sq:K | add:B")->required();
    gen_cmd->add_option("-o,--output", gen.output, "Output file (default stdout)");

    RunConfig run;
    std::int64_t input = -1;
    auto *run_cmd = app.add_subcommand("run", "Simulate a circuit from |0...0>");
    run_cmd->add_option("circuit", run.source, "Circuit file or generator spec")->required();
    run_cmd->add_option("--scheduler", run.scheduler, "baseline | optimized")
        ->check(CLI::IsMember({"baseline", "optimized"}));
    run_cmd->add_option("--precision", run.precision, "single | double")
        ->check(CLI::IsMember({"single", "double"}));
    run_cmd->add_option("-k,--top", run.top_k, "Amplitudes to print");
    run_cmd->add_option("--input", input, "Classical input for sq:K / add:B circuits")
        ->check(CLI::NonNegativeNumber);
    run_cmd->add_option("--dump", run.dump, "Write the full state (n <= 16) to a file");

    VerifyConfig verify;
    auto *verify_cmd =
        app.add_subcommand("verify", "Check the index mapping and scheduler equivalence");
    verify_cmd->add_option("--n-max", verify.n_max, "Largest register for exhaustive checks");
    verify_cmd->add_option("--seed", verify.seed, "Seed for random matrices and states");
    verify_cmd->add_option("--cases", verify.cases, "Random circuits to compare");
    verify_cmd->add_option("--circuit-n-max", verify.circuit_n_max,
                           "Largest register for random circuits");

    BenchConfig bench;
    auto *bench_cmd = app.add_subcommand("bench", "Time a circuit and report energy");
    bench_cmd->add_option("circuit", bench.source, "Circuit file or generator spec")
        ->required();
    bench_cmd->add_option("--schedulers", bench.schedulers, "baseline | optimized | both")
        ->check(CLI::IsMember({"baseline", "optimized", "both"}));
    bench_cmd->add_option("--reps", bench.reps, "Repetitions (median reported)");
    bench_cmd->add_option("--power", bench.power, "Power model name (fpga, cpu, gpu, ...)");
    bench_cmd->add_option("--power-config", bench.power_config,
                          "File of <device>.power_watts = W lines");
    bench_cmd->add_option("--format", bench.format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    bench_cmd->add_option("-o,--output", bench.output, "Report file (default stdout)");
    bench_cmd->add_option("--precision", bench.precision, "single | double")
        ->check(CLI::IsMember({"single", "double"}));
    bench_cmd->add_flag("--per-gate", bench.per_gate, "Record per-gate times");
    bench_cmd->add_flag("--instrumented", bench.policy.instrumented_baseline,
                        "Baseline evaluates every control (no short-circuit)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    run.policy.threads = threads;
    bench.policy.threads = threads;
    if (input >= 0) run.input = static_cast<qsched::Index>(input);

    return guarded(
        [&] {
            if (*gen_cmd) return cmd_gen(gen, std::cout);
            if (*run_cmd) return cmd_run(run, std::cout);
            if (*verify_cmd) return cmd_verify(verify, std::cout);
            return cmd_bench(bench, std::cout, std::cerr);
        },
        std::cerr);
}
