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

#include "revtest/real_io.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace revtest {

namespace {

std::vector<std::string> split_tokens(std::string_view text) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) {
            ++i;
        }
        std::size_t start = i;
        while (i < text.size() && text[i] != ' ' && text[i] != '\t') {
            ++i;
        }
        if (i > start) {
            tokens.emplace_back(text.substr(start, i - start));
        }
    }
    return tokens;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

bool parse_uint(std::string_view text, unsigned& value) {
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    return ec == std::errc{} && ptr == end;
}

// Maps a gate token to (family, arity); returns false for unknown tokens.
bool token_to_family(std::string_view token, std::string& family, unsigned& arity) {
    if (token == "p3") {
        family = "PERES";
        arity = 3;
        return true;
    }
    if (token == "mf3") {
        family = "MFRG";
        arity = 3;
        return true;
    }
    if (token.size() >= 2 && (token[0] == 't' || token[0] == 'f')) {
        unsigned k = 0;
        if (!parse_uint(token.substr(1), k)) {
            return false;
        }
        if (token[0] == 't') {
            if (k == 1) {
                family = "NOT";
            } else if (k == 2) {
                family = "FEYNMAN";
            } else {
                family = "TOFFOLI";
            }
            arity = k;
            return true;
        }
        family = "FREDKIN";
        arity = k;
        return true;
    }
    return false;
}

std::string kind_to_token(const GateKind& kind) {
    switch (kind.rule()) {
    case GateRule::Not:
        return "t1";
    case GateRule::Feynman:
        return "t2";
    case GateRule::Toffoli:
        return "t" + std::to_string(kind.arity());
    case GateRule::Fredkin:
        return "f" + std::to_string(kind.arity());
    case GateRule::Peres:
        return "p3";
    case GateRule::Mfrg:
        return "mf3";
    default:
        throw Error("gate kind '" + kind.name() + "' has no .real token; expand it first");
    }
}

struct LineReader {
    std::vector<std::string> lines;

    explicit LineReader(std::istream& in) {
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') {
                line.pop_back();
            }
            lines.push_back(line);
        }
    }
};

} // namespace

RealDocument parse_real_document(std::istream& in) {
    LineReader reader(in);
    RealDocument doc;

    bool saw_numvars = false;
    bool in_gates = false;
    bool saw_end = false;
    std::unordered_set<std::string> seen_directives;

    auto require_numvars = [&](std::size_t lineno, const std::string& directive) {
        if (!saw_numvars) {
            throw ParseError(lineno, directive + " before .numvars");
        }
    };
    auto parse_name_list = [&](std::size_t lineno, const std::string& directive,
                               std::string_view rest) {
        std::vector<std::string> names = split_tokens(rest);
        require_numvars(lineno, directive);
        if (names.size() != doc.numvars) {
            throw ParseError(lineno, directive + " lists " + std::to_string(names.size()) +
                                         " names but .numvars is " +
                                         std::to_string(doc.numvars));
        }
        return names;
    };

    for (std::size_t idx = 0; idx < reader.lines.size(); ++idx) {
        const std::size_t lineno = idx + 1;
        std::string_view raw = reader.lines[idx];

        // Comment handling: a leading '#' makes the whole line a comment
        // (and possibly a provenance marker); a '#' later in the line
        // truncates it.
        std::string_view effective = trim(raw);
        if (!effective.empty() && effective.front() == '#') {
            if (in_gates && !saw_end) {
                std::vector<std::string> words = split_tokens(effective.substr(1));
                if (words.size() == 2 && words[0] == "tb") {
                    unsigned block = 0;
                    if (parse_uint(words[1], block)) {
                        doc.marks.push_back(
                            {doc.gates.size(), RealMark::Kind::Block, block});
                    }
                } else if (words.size() == 1 && words[0] == "checker") {
                    doc.marks.push_back({doc.gates.size(), RealMark::Kind::Checker, 0});
                }
            }
            continue;
        }
        if (auto hash = effective.find('#'); hash != std::string_view::npos) {
            effective = trim(effective.substr(0, hash));
        }
        if (effective.empty()) {
            continue;
        }

        if (saw_end) {
            throw ParseError(lineno, "content after .end");
        }

        if (effective.front() == '.') {
            const auto space = effective.find_first_of(" \t");
            const std::string directive(effective.substr(0, space));
            const std::string_view rest =
                space == std::string_view::npos ? std::string_view{}
                                                : trim(effective.substr(space + 1));

            if (in_gates) {
                if (directive == ".end") {
                    saw_end = true;
                    continue;
                }
                throw ParseError(lineno, "directive '" + directive +
                                             "' inside the gate section");
            }
            if (directive != ".version" && !seen_directives.insert(directive).second) {
                throw ParseError(lineno, "duplicate directive '" + directive + "'");
            }

            if (directive == ".version") {
                doc.version = std::string(rest);
            } else if (directive == ".numvars") {
                unsigned n = 0;
                if (!parse_uint(rest, n) || n == 0) {
                    throw ParseError(lineno, ".numvars expects a positive integer");
                }
                doc.numvars = n;
                saw_numvars = true;
            } else if (directive == ".variables") {
                doc.variables = parse_name_list(lineno, directive, rest);
                std::unordered_set<std::string> unique(doc.variables.begin(),
                                                       doc.variables.end());
                if (unique.size() != doc.variables.size()) {
                    throw ParseError(lineno, ".variables contains duplicate names");
                }
            } else if (directive == ".inputs") {
                doc.inputs = parse_name_list(lineno, directive, rest);
            } else if (directive == ".outputs") {
                doc.outputs = parse_name_list(lineno, directive, rest);
            } else if (directive == ".constants") {
                require_numvars(lineno, directive);
                if (rest.size() != doc.numvars ||
                    rest.find_first_not_of("01-") != std::string_view::npos) {
                    throw ParseError(lineno, ".constants expects " +
                                                 std::to_string(doc.numvars) +
                                                 " characters over {0,1,-}");
                }
                doc.constants_spec = std::string(rest);
            } else if (directive == ".garbage") {
                require_numvars(lineno, directive);
                if (rest.size() != doc.numvars ||
                    rest.find_first_not_of("1-") != std::string_view::npos) {
                    throw ParseError(lineno, ".garbage expects " +
                                                 std::to_string(doc.numvars) +
                                                 " characters over {1,-}");
                }
                doc.garbage_spec = std::string(rest);
            } else if (directive == ".begin") {
                if (!saw_numvars || doc.variables.empty()) {
                    throw ParseError(lineno, ".begin before .numvars/.variables");
                }
                in_gates = true;
            } else if (directive == ".end") {
                throw ParseError(lineno, ".end without .begin");
            } else {
                doc.extra_directives.emplace_back(effective);
            }
            continue;
        }

        if (!in_gates) {
            throw ParseError(lineno, "gate line before .begin");
        }
        std::vector<std::string> tokens = split_tokens(effective);
        RealGateLine gate;
        gate.token = tokens.front();
        gate.operands.assign(tokens.begin() + 1, tokens.end());
        gate.source_line = lineno;
        doc.gates.push_back(std::move(gate));
    }

    if (!in_gates) {
        throw ParseError(reader.lines.size(), "missing .begin");
    }
    if (!saw_end) {
        throw ParseError(reader.lines.size(), "missing .end");
    }
    return doc;
}

RealDocument parse_real_document(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_real_document(in);
}

Circuit document_to_circuit(const RealDocument& doc) {
    Circuit circuit(doc.numvars);
    circuit.set_labels(doc.variables);

    std::unordered_map<std::string, unsigned> line_of;
    for (unsigned i = 0; i < doc.variables.size(); ++i) {
        line_of[doc.variables[i]] = i;
    }

    for (unsigned i = 0; i < doc.constants_spec.size(); ++i) {
        if (doc.constants_spec[i] != '-') {
            circuit.set_constant(i, doc.constants_spec[i] == '1');
        }
    }
    for (unsigned i = 0; i < doc.garbage_spec.size(); ++i) {
        if (doc.garbage_spec[i] == '1') {
            circuit.set_garbage(i);
        }
    }

    for (const RealGateLine& gate : doc.gates) {
        std::string family;
        unsigned arity = 0;
        if (!token_to_family(gate.token, family, arity)) {
            throw ParseError(gate.source_line, "unknown gate token '" + gate.token + "'");
        }
        if (gate.operands.size() != arity) {
            throw ParseError(gate.source_line, "token '" + gate.token + "' expects " +
                                                   std::to_string(arity) + " lines, got " +
                                                   std::to_string(gate.operands.size()));
        }
        std::vector<unsigned> lines;
        lines.reserve(arity);
        for (const std::string& operand : gate.operands) {
            auto it = line_of.find(operand);
            if (it == line_of.end()) {
                throw ParseError(gate.source_line, "undeclared variable '" + operand + "'");
            }
            lines.push_back(it->second);
        }
        try {
            circuit.add_gate(GateKind::builtin(family, arity), std::move(lines));
        } catch (const Error& e) {
            throw ParseError(gate.source_line, e.what());
        }
    }
    return circuit;
}

Circuit parse_real(std::istream& in) {
    return document_to_circuit(parse_real_document(in));
}

Circuit parse_real(std::string_view text) {
    return document_to_circuit(parse_real_document(text));
}

RealDocument circuit_to_document(const Circuit& circuit) {
    RealDocument doc;
    doc.version = "1.0";
    doc.numvars = circuit.num_lines();

    // Stored labels are used when they form a unique set of token-safe
    // names; otherwise every line falls back to generated x<i> names.
    std::vector<std::string> names;
    names.reserve(circuit.num_lines());
    for (unsigned i = 0; i < circuit.num_lines(); ++i) {
        names.push_back(circuit.label(i));
    }
    const bool tokens_safe =
        std::all_of(names.begin(), names.end(), [](const std::string& name) {
            return !name.empty() && name[0] != '.' &&
                   name.find_first_of(" \t#") == std::string::npos;
        });
    std::unordered_set<std::string> unique(names.begin(), names.end());
    if (!tokens_safe || unique.size() != names.size()) {
        names.clear();
        for (unsigned i = 0; i < circuit.num_lines(); ++i) {
            names.push_back("x" + std::to_string(i + 1));
        }
    }
    doc.variables = names;
    doc.inputs = names;
    doc.outputs = names;

    doc.constants_spec.assign(circuit.num_lines(), '-');
    for (const auto& [line, value] : circuit.constants()) {
        doc.constants_spec[line] = value ? '1' : '0';
    }
    doc.garbage_spec.assign(circuit.num_lines(), '-');
    for (unsigned line : circuit.garbage()) {
        doc.garbage_spec[line] = '1';
    }

    for (const GateInstance& gate : circuit.gates()) {
        RealGateLine line;
        line.token = kind_to_token(gate.kind);
        for (unsigned l : gate.lines) {
            line.operands.push_back(names[l]);
        }
        doc.gates.push_back(std::move(line));
    }
    return doc;
}

void emit_real_document(const RealDocument& doc, std::ostream& out) {
    auto emit_names = [&out](const char* directive, const std::vector<std::string>& names) {
        if (names.empty()) {
            return;
        }
        out << directive;
        for (const std::string& name : names) {
            out << ' ' << name;
        }
        out << '\n';
    };

    if (!doc.version.empty()) {
        out << ".version " << doc.version << '\n';
    }
    out << ".numvars " << doc.numvars << '\n';
    emit_names(".variables", doc.variables);
    emit_names(".inputs", doc.inputs);
    emit_names(".outputs", doc.outputs);
    if (!doc.constants_spec.empty()) {
        out << ".constants " << doc.constants_spec << '\n';
    }
    if (!doc.garbage_spec.empty()) {
        out << ".garbage " << doc.garbage_spec << '\n';
    }
    for (const std::string& directive : doc.extra_directives) {
        out << directive << '\n';
    }
    out << ".begin\n";

    std::multimap<std::size_t, const RealMark*> marks_at;
    for (const RealMark& mark : doc.marks) {
        marks_at.emplace(mark.gate_index, &mark);
    }
    auto emit_marks = [&](std::size_t index) {
        auto [lo, hi] = marks_at.equal_range(index);
        for (auto it = lo; it != hi; ++it) {
            if (it->second->kind == RealMark::Kind::Block) {
                out << "# tb " << it->second->block_index << '\n';
            } else {
                out << "# checker\n";
            }
        }
    };

    for (std::size_t i = 0; i < doc.gates.size(); ++i) {
        emit_marks(i);
        out << doc.gates[i].token;
        for (const std::string& operand : doc.gates[i].operands) {
            out << ' ' << operand;
        }
        out << '\n';
    }
    emit_marks(doc.gates.size());
    out << ".end\n";
}

std::string emit_real_document(const RealDocument& doc) {
    std::ostringstream out;
    emit_real_document(doc, out);
    return out.str();
}

void emit_real(const Circuit& circuit, std::ostream& out) {
    emit_real_document(circuit_to_document(circuit), out);
}

std::string emit_real(const Circuit& circuit) {
    std::ostringstream out;
    emit_real(circuit, out);
    return out.str();
}

} // namespace revtest
