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

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "revtest/circuit.hpp"

namespace revtest {

/// Provenance marker read from a `# tb <index>` or `# checker` comment.
/// `gate_index` is the position in the gate list the marker precedes.
struct RealMark {
    enum class Kind { Block, Checker };

    std::size_t gate_index = 0;
    Kind kind = Kind::Block;
    std::size_t block_index = 0; // meaningful for Kind::Block

    bool operator==(const RealMark&) const = default;
};

/// One `<token> <var>...` gate line.
struct RealGateLine {
    std::string token;
    std::vector<std::string> operands;
    std::size_t source_line = 0;
};

/// A parsed .real file, structurally faithful to the text. Unrecognized
/// dotted directives are carried verbatim and re-emitted on round-trip.
struct RealDocument {
    std::string version;
    unsigned numvars = 0;
    std::vector<std::string> variables;
    std::vector<std::string> inputs;
    std::vector<std::string> outputs;
    std::string constants_spec; // over {0,1,-}, empty if absent
    std::string garbage_spec;   // over {1,-}, empty if absent
    std::vector<std::string> extra_directives;
    std::vector<RealGateLine> gates;
    std::vector<RealMark> marks;
};

/// Supported directives: .version .numvars .variables .inputs .outputs
/// .constants .garbage .begin .end. One gate per line between .begin and
/// .end; `#` starts a comment; LF or CRLF accepted. Gate tokens: t1 (NOT),
/// t2 (FEYNMAN), t<k> (TOFFOLI), f<k> (FREDKIN), p3 (PERES), mf3 (MFRG).
/// All errors are ParseError with the offending line number.
RealDocument parse_real_document(std::istream& in);
RealDocument parse_real_document(std::string_view text);

/// Lowers a document to a Circuit: variables become lines in declaration
/// order, .constants/.garbage become annotations, gate tokens become
/// built-in kinds.
Circuit document_to_circuit(const RealDocument& doc);

Circuit parse_real(std::istream& in);
Circuit parse_real(std::string_view text);

/// Lifts a circuit of serializable kinds back into a document. Kinds with
/// no token (identity, TRG wrappers, table kinds) raise Error; expand
/// testable circuits first.
RealDocument circuit_to_document(const Circuit& circuit);

/// Writes a document with canonical directive order and LF line endings.
/// Marks are emitted as `# tb <i>` / `# checker` comment lines.
void emit_real_document(const RealDocument& doc, std::ostream& out);
std::string emit_real_document(const RealDocument& doc);

void emit_real(const Circuit& circuit, std::ostream& out);
std::string emit_real(const Circuit& circuit);

} // namespace revtest
