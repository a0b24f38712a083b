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
 * Benchmark harness: median wall-clock timing of whole circuits, a
 * constant-power energy model, and CSV/JSON report emission.
 *
 * CSV schema `qsched-bench/1`, one row per report, columns:
 *
 *     schema,circuit,qubits,scheduler,precision,device,power_watts,
 *     repetitions,total_time_s,iterations,energy_j
 *
 * JSON: {"schema": "qsched-bench/1", "reports": [{...}]} with the same
 * field names plus "per_gate_times_s" when per-gate timing was enabled.
 * Rows are sorted by (circuit, scheduler); reals carry 6 significant digits.
 */
#pragma once

#include "core.hpp"
#include "sched.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace qsched {

inline constexpr const char *kBenchSchema = "qsched-bench/1";

struct PowerModel {
    std::string device_name;
    double power_watts;

    PowerModel(std::string name, double watts)
        : device_name(std::move(name)), power_watts(watts) {
        if (!std::isfinite(watts) || watts <= 0.0) {
            throw std::invalid_argument("power rating for '" + device_name +
                                        "' must be finite and positive");
        }
    }

    [[nodiscard]] PowerModel scaled(double factor) const {
        return {device_name, power_watts * factor};
    }
};

/// Device ratings used for the FPGA / CPU / GPU comparison.
inline std::map<std::string, PowerModel> default_power_models() {
    return {{"fpga", {"fpga", 25.0}}, {"cpu", {"cpu", 160.0}}, {"gpu", {"gpu", 250.0}}};
}

/**
 * @brief Reads `<device>.power_watts = <watts>` lines over `base`.
 *
 * Blank lines and `#` comments are ignored; any other key is an error.
 */
inline std::map<std::string, PowerModel>
parse_power_config(std::string_view text,
                   std::map<std::string, PowerModel> base = default_power_models()) {
    constexpr std::string_view suffix = ".power_watts";
    const auto trim = [](std::string_view s) {
        const auto b = s.find_first_not_of(" \t\r");
        if (b == std::string_view::npos) return std::string_view{};
        return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
    };
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) continue;
        const auto where = "power config line " + std::to_string(line_no) + ": ";
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw Error(where + "expected key = value");
        }
        const auto key = trim(line.substr(0, eq));
        const auto value = std::string(trim(line.substr(eq + 1)));
        if (!key.ends_with(suffix) || key.size() == suffix.size()) {
            throw Error(where + "unknown key '" + std::string(key) + "'");
        }
        const std::string device(key.substr(0, key.size() - suffix.size()));
        std::size_t used = 0;
        double watts = 0.0;
        try {
            watts = std::stod(value, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used == 0 || used != value.size()) {
            throw Error(where + "malformed wattage '" + value + "'");
        }
        base.insert_or_assign(device, PowerModel(device, watts));
    }
    return base;
}

/// Joules for a run of `seconds` at the model's constant rating.
inline double energy(double seconds, const PowerModel &power) {
    if (!(seconds >= 0.0)) {
        throw std::invalid_argument("elapsed time must be non-negative");
    }
    return seconds * power.power_watts;
}

struct BenchReport {
    std::string circuit_name;
    unsigned num_qubits = 0;
    Strategy scheduler = Strategy::Baseline;
    std::string precision = "double";
    std::size_t repetitions = 0;
    std::vector<double> per_gate_times;
    double total_time_seconds = 0.0;
    Index iterations_executed = 0;
    std::string device;
    double power_watts = 0.0;
    double energy_joules = 0.0;
};

struct BenchOptions {
    std::size_t repetitions = 5;
    ExecPolicy policy;
    bool per_gate_timing = false;
};

namespace detail {
inline double median(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    return n % 2 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

template <typename Real> constexpr const char *precision_name() {
    return std::is_same_v<Real, float> ? "single" : "double";
}
} // namespace detail

/**
 * @brief Runs `circuit` from |0...0> `options.repetitions` times and reports
 * the median total wall time.
 *
 * Every gate's scheduled iteration count is checked against the
 * 2^(n-1) / 2^(n-n_c-1) law; a mismatch throws.
 */
template <typename Real = double>
BenchReport run_bench(const Circuit &circuit, std::string name, Strategy strategy,
                      const PowerModel &power, const BenchOptions &options = {}) {
    using Clock = std::chrono::steady_clock;
    if (options.repetitions < 1) {
        throw std::invalid_argument("repetitions must be >= 1");
    }
    const unsigned n = circuit.num_qubits();
    const auto gates = circuit.gates();
    std::vector<double> totals;
    std::vector<std::vector<double>> gate_times(options.per_gate_timing ? gates.size() : 0);
    Index iterations = 0;

    for (std::size_t rep = 0; rep < options.repetitions; ++rep) {
        StateVector<Real> state(n);
        iterations = 0;
        const auto start = Clock::now();
        for (std::size_t g = 0; g < gates.size(); ++g) {
            const auto gate_start = options.per_gate_timing ? Clock::now() : start;
            const Index count = apply_gate(state, gates[g], strategy, options.policy);
            if (options.per_gate_timing) {
                gate_times[g].push_back(
                    std::chrono::duration<double>(Clock::now() - gate_start).count());
            }
            if (count != executed_iteration_count(strategy, n, gates[g].num_controls())) {
                throw Error("iteration-count law violated at gate " + std::to_string(g));
            }
            iterations += count;
        }
        totals.push_back(std::chrono::duration<double>(Clock::now() - start).count());
    }
    if (iterations != expected_iterations(circuit, strategy)) {
        throw Error("iteration-count law violated for circuit " + name);
    }

    BenchReport report;
    report.circuit_name = std::move(name);
    report.num_qubits = n;
    report.scheduler = strategy;
    report.precision = detail::precision_name<Real>();
    report.repetitions = options.repetitions;
    for (auto &samples : gate_times) {
        report.per_gate_times.push_back(detail::median(std::move(samples)));
    }
    report.total_time_seconds = detail::median(std::move(totals));
    report.iterations_executed = iterations;
    report.device = power.device_name;
    report.power_watts = power.power_watts;
    report.energy_joules = energy(report.total_time_seconds, power);
    return report;
}

enum class ReportFormat { Csv, Json };

namespace detail {
inline std::string sig6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

inline double round6(double v) { return std::stod(sig6(v)); }

inline std::vector<BenchReport> sorted(std::vector<BenchReport> reports) {
    std::stable_sort(reports.begin(), reports.end(), [](const auto &l, const auto &r) {
        const std::string_view ls = to_string(l.scheduler), rs = to_string(r.scheduler);
        return std::tie(l.circuit_name, ls) < std::tie(r.circuit_name, rs);
    });
    return reports;
}

inline Strategy parse_strategy(std::string_view s) {
    if (s == "baseline") return Strategy::Baseline;
    if (s == "optimized") return Strategy::Optimized;
    throw Error("unknown scheduler '" + std::string(s) + "'");
}
} // namespace detail

inline std::string emit_report(const std::vector<BenchReport> &reports, ReportFormat format) {
    if (reports.empty()) {
        throw std::invalid_argument("no reports to emit");
    }
    const auto rows = detail::sorted(reports);
    if (format == ReportFormat::Csv) {
        std::ostringstream out;
        out << "schema,circuit,qubits,scheduler,precision,device,power_watts,"
               "repetitions,total_time_s,iterations,energy_j\n";
        for (const auto &r : rows) {
            out << kBenchSchema << ',' << r.circuit_name << ',' << r.num_qubits << ','
                << to_string(r.scheduler) << ',' << r.precision << ',' << r.device << ','
                << detail::sig6(r.power_watts) << ',' << r.repetitions << ','
                << detail::sig6(r.total_time_seconds) << ',' << r.iterations_executed
                << ',' << detail::sig6(r.energy_joules) << '\n';
        }
        return out.str();
    }
    nlohmann::ordered_json doc;
    doc["schema"] = kBenchSchema;
    doc["reports"] = nlohmann::ordered_json::array();
    for (const auto &r : rows) {
        nlohmann::ordered_json row;
        row["circuit"] = r.circuit_name;
        row["qubits"] = r.num_qubits;
        row["scheduler"] = to_string(r.scheduler);
        row["precision"] = r.precision;
        row["device"] = r.device;
        row["power_watts"] = detail::round6(r.power_watts);
        row["repetitions"] = r.repetitions;
        row["total_time_s"] = detail::round6(r.total_time_seconds);
        row["iterations"] = r.iterations_executed;
        row["energy_j"] = detail::round6(r.energy_joules);
        if (!r.per_gate_times.empty()) {
            auto &times = row["per_gate_times_s"] = nlohmann::ordered_json::array();
            for (const double t : r.per_gate_times) {
                times.push_back(detail::round6(t));
            }
        }
        doc["reports"].push_back(std::move(row));
    }
    return doc.dump(2) + "\n";
}

/// Reads back a CSV report emitted by emit_report.
inline std::vector<BenchReport> parse_report_csv(std::string_view text) {
    std::vector<BenchReport> reports;
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line) || !line.starts_with("schema,circuit,")) {
        throw Error("missing report header");
    }
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::istringstream row(line);
        for (std::string cell; std::getline(row, cell, ',');) {
            cells.push_back(cell);
        }
        if (cells.size() != 11 || cells[0] != kBenchSchema) {
            throw Error("malformed report row: " + line);
        }
        BenchReport r;
        r.circuit_name = cells[1];
        r.num_qubits = static_cast<unsigned>(std::stoul(cells[2]));
        r.scheduler = detail::parse_strategy(cells[3]);
        r.precision = cells[4];
        r.device = cells[5];
        r.power_watts = std::stod(cells[6]);
        r.repetitions = std::stoul(cells[7]);
        r.total_time_seconds = std::stod(cells[8]);
        r.iterations_executed = std::stoull(cells[9]);
        r.energy_joules = std::stod(cells[10]);
        reports.push_back(std::move(r));
    }
    return reports;
}

} // namespace qsched
