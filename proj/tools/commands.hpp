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
/**
 * @file
 * Subcommands of the `qsched` tool, kept free of argument parsing so tests
 * can drive them directly.
 */
#pragma once

#include <qsched/qsched.hpp>

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace qsched::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitError = 1,
    kExitUsage = 2,
    kExitCapacity = 3,
    kExitVerifyFailed = 4,
    kExitInput = 5,
};

/// Bad flags or generator specs.
class UsageError : public Error {
  public:
    using Error::Error;
};

enum class Family { Qft, Stream, Square, Adder };

/// A `name:N` generator token: qft:N, stream:N, sq:K, add:B.
struct GeneratorSpec {
    Family family;
    unsigned param;
    std::string text;
};

inline std::optional<GeneratorSpec> parse_generator_spec(const std::string &text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        return std::nullopt;
    }
    const std::string name = text.substr(0, colon);
    Family family;
    if (name == "qft") family = Family::Qft;
    else if (name == "stream") family = Family::Stream;
    else if (name == "sq") family = Family::Square;
    else if (name == "add") family = Family::Adder;
    else return std::nullopt;

    const std::string digits = text.substr(colon + 1);
    unsigned value = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
        throw UsageError("malformed generator parameter in '" + text + "'");
    }
    unsigned qubits = 0;
    switch (family) {
    case Family::Qft:
    case Family::Stream: qubits = value; break;
    case Family::Square: qubits = 3 * value + 2; break;
    case Family::Adder: qubits = 2 * value + 2; break;
    }
    if (value < 1 || value > kMaxCircuitQubits || qubits > kMaxCircuitQubits) {
        throw UsageError("generator '" + text + "' outside capacity bounds (1.." +
                         std::to_string(kMaxCircuitQubits) + " qubits)");
    }
    return GeneratorSpec{family, value, text};
}

inline Circuit build(const GeneratorSpec &spec) {
    switch (spec.family) {
    case Family::Qft: return gen_qft(spec.param);
    case Family::Stream: return gen_streaming(spec.param);
    case Family::Square: return gen_squaring(spec.param);
    case Family::Adder: return gen_cuccaro_adder(spec.param);
    }
    throw UsageError("unknown generator");
}

inline std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/// Generator spec or path to a circuit file.
inline Circuit load_circuit(const std::string &source) {
    if (const auto spec = parse_generator_spec(source)) {
        return build(*spec);
    }
    return parse_circuit(read_file(source));
}

inline Strategy parse_scheduler(const std::string &s) {
    if (s == "baseline") return Strategy::Baseline;
    if (s == "optimized") return Strategy::Optimized;
    throw UsageError("scheduler must be 'baseline' or 'optimized'");
}

struct GenConfig {
    std::string spec;
    std::string output;  // empty: stdout
};

inline int cmd_gen(const GenConfig &cfg, std::ostream &out) {
    const auto spec = parse_generator_spec(cfg.spec);
    if (!spec) {
        throw UsageError("unknown generator spec '" + cfg.spec +
                         "' (expected qft:N, stream:N, sq:K or add:B)");
    }
    const std::string text = serialize_circuit(build(*spec));
    if (cfg.output.empty()) {
        out << text;
    } else {
        std::ofstream file(cfg.output, std::ios::binary);
        if (!file || !(file << text)) {
            throw Error("cannot write '" + cfg.output + "'");
        }
    }
    return kExitOk;
}

struct RunConfig {
    std::string source;
    std::string scheduler = "optimized";
    std::string precision = "double";
    std::size_t top_k = 8;
    std::optional<Index> input;
    std::string dump;  // full-state dump path, n <= 16
    ExecPolicy policy;
};

inline constexpr unsigned kMaxDumpQubits = 16;

namespace detail {

inline std::string basis_label(Index k, unsigned n) {
    std::string bits(n, '0');
    for (unsigned b = 0; b < n; ++b) {
        if ((k >> b) & 1U) bits[n - 1 - b] = '1';
    }
    return bits;
}

template <typename Real>
int run_with(const RunConfig &cfg, const Circuit &circuit, Strategy strategy,
             std::ostream &out) {
    StateVector<Real> state(circuit.num_qubits());
    const Index iterations = run_circuit(state, circuit, strategy, cfg.policy);
    const unsigned n = state.num_qubits();

    std::vector<Index> order(state.size());
    for (Index k = 0; k < state.size(); ++k) order[k] = k;
    const std::size_t k = std::min<std::size_t>(cfg.top_k, order.size());
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k),
                      order.end(), [&](Index l, Index r) {
                          const auto nl = std::norm(state[l]), nr = std::norm(state[r]);
                          return nl != nr ? nl > nr : l < r;
                      });

    out << "qubits: " << n << "\n"
        << "gates: " << circuit.size() << "\n"
        << "scheduler: " << to_string(strategy) << "\n"
        << "precision: " << cfg.precision << "\n"
        << "iterations: " << iterations << "\n"
        << std::setprecision(12) << std::fixed << "norm: " << norm_sq(state) << "\n"
        << "top " << k << " amplitudes:\n";
    for (std::size_t j = 0; j < k; ++j) {
        const Index idx = order[j];
        out << "  |" << basis_label(idx, n) << "> " << idx << "  " << std::setprecision(9)
            << static_cast<double>(state[idx].real()) << " "
            << static_cast<double>(state[idx].imag()) << "  |a|^2="
            << static_cast<double>(std::norm(state[idx])) << "\n";
    }
    out.unsetf(std::ios::floatfield);

    if (!cfg.dump.empty()) {
        if (n > kMaxDumpQubits) {
            throw CapacityError("state dump limited to " + std::to_string(kMaxDumpQubits) +
                                " qubits");
        }
        std::ofstream file(cfg.dump);
        file << std::setprecision(17);
        for (Index idx = 0; idx < state.size(); ++idx) {
            file << idx << ' ' << static_cast<double>(state[idx].real()) << ' '
                 << static_cast<double>(state[idx].imag()) << '\n';
        }
        if (!file) throw Error("cannot write '" + cfg.dump + "'");
    }
    return kExitOk;
}

} // namespace detail

/**
 * @brief Simulates a circuit and prints norm, iterations and the dominant
 * amplitudes. `--input a` prepends X gates loading a into the input register
 * of a squaring (sq:K) or adder (add:B, loads a) generator.
 */
inline int cmd_run(const RunConfig &cfg, std::ostream &out) {
    const Strategy strategy = parse_scheduler(cfg.scheduler);
    Circuit circuit = load_circuit(cfg.source);
    if (cfg.input) {
        const auto spec = parse_generator_spec(cfg.source);
        if (!spec || (spec->family != Family::Square && spec->family != Family::Adder)) {
            throw UsageError("--input requires an sq:K or add:B generator spec");
        }
        const unsigned width = spec->param;
        if (*cfg.input >= pow2(width)) {
            throw UsageError("--input value does not fit in " + std::to_string(width) +
                             " bits");
        }
        Circuit prepared(circuit.num_qubits());
        for (unsigned b = 0; b < width; ++b) {
            if ((*cfg.input >> b) & 1U) {
                const Qubit q = spec->family == Family::Square ? SquaringLayout{width}.input(b)
                                                               : AdderLayout{width}.a(b);
                prepared.add(GateOp::x(q));
            }
        }
        for (const GateOp &g : circuit.gates()) prepared.add(g);
        circuit = std::move(prepared);
    }
    if (circuit.num_qubits() > kMaxStateQubits) {
        throw CapacityError("circuit needs " + std::to_string(circuit.num_qubits()) +
                            " qubits; state vectors are limited to " +
                            std::to_string(kMaxStateQubits));
    }
    if (cfg.precision == "double") return detail::run_with<double>(cfg, circuit, strategy, out);
    if (cfg.precision == "single") return detail::run_with<float>(cfg, circuit, strategy, out);
    throw UsageError("precision must be 'single' or 'double'");
}

struct VerifyConfig {
    unsigned n_max = 8;
    std::uint64_t seed = 42;
    std::size_t cases = 1000;
    unsigned circuit_n_max = 10;
    MappingFn mapping = default_mapping;
};

/// Exhaustive mapping check plus scheduler-equivalence suites. Output is a
/// pure function of the config.
inline int cmd_verify(const VerifyConfig &cfg, std::ostream &out) {
    if (cfg.n_max < 2 || cfg.n_max > 16 || cfg.circuit_n_max < 1 ||
        cfg.circuit_n_max > 20) {
        throw UsageError("verify sizes out of range (n-max in [2,16], circuit-n-max in [1,20])");
    }
    const auto mapping = verify_mapping(cfg.n_max, cfg.mapping);
    if (mapping.first_failure) {
        out << "mapping: MISMATCH at " << to_string(*mapping.first_failure) << "\n";
        return kExitVerifyFailed;
    }
    out << "mapping: " << mapping.geometries << " geometries (n=2.." << cfg.n_max
        << ") match the brute-force active set\n";

    const auto report_eq = [&](const char *label, const EquivalenceReport &r) {
        out << label << ": " << r.cases << " cases, " << r.bit_exact << " bit-exact, max |diff| "
            << r.max_abs_diff << "\n";
        if (r.first_failure) {
            out << label << ": MISMATCH at " << *r.first_failure << "\n";
            return false;
        }
        return true;
    };
    if (!report_eq("geometry equivalence",
                   verify_geometry_equivalence(cfg.n_max, cfg.seed))) {
        return kExitVerifyFailed;
    }
    if (!report_eq("random circuits",
                   verify_random_circuits(cfg.cases, cfg.circuit_n_max, cfg.seed))) {
        return kExitVerifyFailed;
    }
    out << "all geometries verified\n";
    return kExitOk;
}

struct BenchConfig {
    std::string source;
    std::string schedulers = "both";
    std::size_t reps = 5;
    std::string power = "fpga";
    std::string power_config;  // optional key=value file
    std::string format = "csv";
    std::string output;        // empty: report on stdout, summary on stderr
    std::string precision = "double";
    bool per_gate = false;
    ExecPolicy policy;
};

inline int cmd_bench(const BenchConfig &cfg, std::ostream &out, std::ostream &err) {
    std::vector<Strategy> strategies;
    if (cfg.schedulers == "both") strategies = {Strategy::Baseline, Strategy::Optimized};
    else strategies = {parse_scheduler(cfg.schedulers)};
    if (cfg.format != "csv" && cfg.format != "json") {
        throw UsageError("format must be 'csv' or 'json'");
    }
    if (cfg.reps < 1) throw UsageError("--reps must be >= 1");

    auto models = cfg.power_config.empty()
                      ? default_power_models()
                      : parse_power_config(read_file(cfg.power_config));
    const auto model = models.find(cfg.power);
    if (model == models.end()) {
        throw UsageError("unknown power model '" + cfg.power + "'");
    }
    const Circuit circuit = load_circuit(cfg.source);
    if (circuit.num_qubits() > kMaxStateQubits) {
        throw CapacityError("circuit needs " + std::to_string(circuit.num_qubits()) +
                            " qubits; state vectors are limited to " +
                            std::to_string(kMaxStateQubits));
    }

    const BenchOptions options{cfg.reps, cfg.policy, cfg.per_gate};
    std::vector<BenchReport> reports;
    for (const Strategy s : strategies) {
        if (cfg.precision == "double") {
            reports.push_back(run_bench<double>(circuit, cfg.source, s, model->second, options));
        } else if (cfg.precision == "single") {
            reports.push_back(run_bench<float>(circuit, cfg.source, s, model->second, options));
        } else {
            throw UsageError("precision must be 'single' or 'double'");
        }
    }

    const std::string text =
        emit_report(reports, cfg.format == "csv" ? ReportFormat::Csv : ReportFormat::Json);
    std::ostream &summary = cfg.output.empty() ? err : out;
    if (cfg.output.empty()) {
        out << text;
    } else {
        std::ofstream file(cfg.output, std::ios::binary);
        if (!file || !(file << text)) throw Error("cannot write '" + cfg.output + "'");
    }
    for (const auto &r : reports) {
        summary << to_string(r.scheduler) << ": " << r.total_time_seconds << " s, "
                << r.iterations_executed << " iterations, " << r.energy_joules << " J\n";
    }
    if (reports.size() == 2) {
        summary << "optimized/baseline time ratio: "
                << reports[1].total_time_seconds / reports[0].total_time_seconds << "\n";
    }
    return kExitOk;
}

/// Maps exceptions to exit codes, printing the diagnostic to err.
template <typename Fn> int guarded(Fn &&fn, std::ostream &err) {
    try {
        return fn();
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CapacityError &e) {
        err << "capacity error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const ParseError &e) {
        err << "parse error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
}

} // namespace qsched::cli
