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
 * Line-oriented circuit text format.
 *
 *     # comment
 *     qubits 3
 *     h 0
 *     x 0 1 2        # <name> <target> [controls...]
 *     ccx 1 2 0      # k leading 'c's: k controls, then the target
 *     rm:3 2 0
 *
 * Gate names are h, x, y, z and rm:<m> (m >= 1). LF and CRLF line endings
 * are accepted; the serializer writes LF and the bare `<name> <target>
 * [controls...]` form.
 */
#pragma once

#include "core.hpp"

#include <charconv>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace qsched {

/// Parse failure with a 1-based line and column.
class ParseError : public Error {
  public:
    ParseError(std::size_t line, std::size_t column, const std::string &message)
        : Error("line " + std::to_string(line) + ", column " +
                std::to_string(column) + ": " + message),
          line_(line), column_(column) {}

    [[nodiscard]] std::size_t line() const { return line_; }
    [[nodiscard]] std::size_t column() const { return column_; }

  private:
    std::size_t line_;
    std::size_t column_;
};

/// Largest rotation order accepted by the parser.
inline constexpr unsigned kMaxRotationOrder = 1023;

namespace detail {

struct Token {
    std::string_view text;
    std::size_t column;
};

inline bool is_blank(char ch) {
    return ch == ' ' || ch == '\t' || ch == '\r' || ch == '\v' || ch == '\f';
}

inline std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && is_blank(line[i])) {
            ++i;
        }
        const std::size_t start = i;
        while (i < line.size() && !is_blank(line[i])) {
            ++i;
        }
        if (i > start) {
            tokens.push_back({line.substr(start, i - start), start + 1});
        }
    }
    return tokens;
}

inline std::optional<unsigned long long> parse_uint(std::string_view s) {
    unsigned long long v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        return std::nullopt;
    }
    return v;
}

class LineParser {
  public:
    LineParser(std::size_t line) : line_(line) {}

    [[noreturn]] void fail(const Token &tok, const std::string &msg) const {
        throw ParseError(line_, tok.column, msg);
    }

    unsigned long long number(const Token &tok) const {
        const auto v = parse_uint(tok.text);
        if (!v) {
            fail(tok, "malformed number '" + std::string(tok.text) + "'");
        }
        return *v;
    }

    Qubit qubit(const Token &tok, unsigned num_qubits) const {
        const auto v = number(tok);
        if (v >= num_qubits) {
            fail(tok, "qubit " + std::string(tok.text) + " out of range for a " +
                          std::to_string(num_qubits) + "-qubit register");
        }
        return static_cast<Qubit>(v);
    }

  private:
    std::size_t line_;
};

inline GateOp make_named_gate(const LineParser &lp, const Token &name_tok,
                              std::string_view base, Qubit target,
                              std::vector<Qubit> controls) {
    if (base == "h") return GateOp::h(target, std::move(controls));
    if (base == "x") return GateOp::x(target, std::move(controls));
    if (base == "y") return GateOp::y(target, std::move(controls));
    if (base == "z") return GateOp::z(target, std::move(controls));
    if (base.starts_with("rm:")) {
        const auto m = parse_uint(base.substr(3));
        if (!m) {
            lp.fail(name_tok, "malformed rotation order in '" +
                                  std::string(name_tok.text) + "'");
        }
        if (*m < 1 || *m > kMaxRotationOrder) {
            lp.fail(name_tok, "rotation order must be in [1, " +
                                  std::to_string(kMaxRotationOrder) + "]");
        }
        return GateOp::rm(static_cast<unsigned>(*m), target, std::move(controls));
    }
    lp.fail(name_tok, "unknown gate '" + std::string(name_tok.text) + "'");
}

inline bool known_base(std::string_view base) {
    return base == "h" || base == "x" || base == "y" || base == "z" ||
           base.starts_with("rm:");
}

} // namespace detail

inline Circuit parse_circuit(std::string_view text) {
    std::optional<Circuit> circuit;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) {
            eol = text.size();
        }
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        const auto tokens = detail::tokenize(line);
        if (tokens.empty()) {
            continue;
        }
        const detail::LineParser lp(line_no);
        const detail::Token &head = tokens[0];

        if (head.text == "qubits") {
            if (circuit) {
                lp.fail(head, "duplicate 'qubits' header");
            }
            if (tokens.size() != 2) {
                lp.fail(head, "expected 'qubits N'");
            }
            const auto n = lp.number(tokens[1]);
            if (n < 1 || n > kMaxCircuitQubits) {
                lp.fail(tokens[1], "qubit count must be in [1, " +
                                       std::to_string(kMaxCircuitQubits) + "]");
            }
            circuit.emplace(static_cast<unsigned>(n));
            continue;
        }
        if (!circuit) {
            lp.fail(head, "expected 'qubits N' header before gates");
        }

        std::size_t prefix = 0;
        while (prefix < head.text.size() && head.text[prefix] == 'c') {
            ++prefix;
        }
        const std::string_view base = head.text.substr(prefix);
        if (!detail::known_base(base)) {
            lp.fail(head, "unknown gate '" + std::string(head.text) + "'");
        }
        const std::span<const detail::Token> operands(tokens.begin() + 1, tokens.end());
        if (operands.empty()) {
            lp.fail(head, "missing target qubit");
        }
        if (prefix > 0 && operands.size() != prefix + 1) {
            lp.fail(head, "'" + std::string(head.text) + "' takes " +
                              std::to_string(prefix) + " control(s) and a target");
        }

        const unsigned n = circuit->num_qubits();
        const std::size_t target_slot = prefix > 0 ? operands.size() - 1 : 0;
        const Qubit target = lp.qubit(operands[target_slot], n);
        std::vector<Qubit> controls;
        for (std::size_t k = 0; k < operands.size(); ++k) {
            if (k == target_slot) {
                continue;
            }
            const Qubit c = lp.qubit(operands[k], n);
            if (c == target) {
                lp.fail(operands[k], "control " + std::to_string(c) +
                                         " collides with the target");
            }
            if (std::find(controls.begin(), controls.end(), c) != controls.end()) {
                lp.fail(operands[k], "duplicate control " + std::to_string(c));
            }
            controls.push_back(c);
        }
        circuit->add(detail::make_named_gate(lp, head, base, target, std::move(controls)));
    }
    if (!circuit) {
        throw ParseError(1, 1, "missing 'qubits N' header");
    }
    return std::move(*circuit);
}

/// Throws Error for gates with custom matrices, which have no text name.
inline std::string serialize_circuit(const Circuit &circuit) {
    std::ostringstream out;
    out << "qubits " << circuit.num_qubits() << '\n';
    for (const GateOp &gate : circuit.gates()) {
        switch (gate.kind()) {
        case GateKind::H: out << 'h'; break;
        case GateKind::X: out << 'x'; break;
        case GateKind::Y: out << 'y'; break;
        case GateKind::Z: out << 'z'; break;
        case GateKind::Rm: out << "rm:" << gate.rm_order(); break;
        case GateKind::Custom:
            throw Error("custom gate matrices have no text representation");
        }
        out << ' ' << gate.target();
        for (const Qubit c : gate.controls()) {
            out << ' ' << c;
        }
        out << '\n';
    }
    return out.str();
}

} // namespace qsched
