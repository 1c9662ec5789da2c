/*
 * Copyright 2026 The ParityForge Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <sstream>

#include "parityforge/circuit.h"
#include "text_util.h"

namespace parityforge {

using internal::parse_count;
using internal::parse_label;

Circuit parse_circuit(std::string_view text) {
    auto lines = internal::tokenize_lines(text);
    if (lines.empty()) {
        throw ParseError(0, "missing header line");
    }
    const auto &header = lines[0];
    if (header.tokens.size() != 2) {
        throw ParseError(header.number, "expected header 'n g'");
    }
    size_t n = parse_count(header.tokens[0], header.number, "wire count");
    size_t g = parse_count(header.tokens[1], header.number, "gate count");
    if (n > kMaxVertices) {
        throw ParseError(header.number, "circuit has " + std::to_string(n) + " wires; at most " +
                                            std::to_string(kMaxVertices) + " supported");
    }
    Circuit c(n);
    for (size_t k = 1; k < lines.size(); ++k) {
        const auto &line = lines[k];
        if (line.tokens.size() != 3 || line.tokens[0] != "CNOT") {
            throw ParseError(line.number, "expected 'CNOT c t'");
        }
        Vertex control = parse_label(line.tokens[1], n, line.number, "wire");
        Vertex target = parse_label(line.tokens[2], n, line.number, "wire");
        if (control == target) {
            throw ParseError(line.number, "CNOT control equals target");
        }
        c.append(control, target);
    }
    if (c.size() != g) {
        throw ParseError(header.number, "header declares " + std::to_string(g) + " gates but " +
                                            std::to_string(c.size()) + " were given");
    }
    return c;
}

std::string format_circuit(const Circuit &c) {
    std::ostringstream out;
    out << c.num_wires() << ' ' << c.size() << '\n';
    for (const Gate &gate : c.gates()) {
        out << "CNOT " << gate.control + 1 << ' ' << gate.target + 1 << '\n';
    }
    return out.str();
}

}  // namespace parityforge
