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

#include <set>
#include <sstream>

#include "parityforge/graph.h"
#include "text_util.h"

namespace parityforge {

using internal::parse_count;
using internal::parse_label;

Graph parse_graph(std::string_view text) {
    auto lines = internal::tokenize_lines(text);
    size_t k = 0;
    // DIMACS files may open with "c" comment lines.
    while (k < lines.size() && lines[k].tokens[0] == "c") {
        ++k;
    }
    if (k == lines.size()) {
        throw ParseError(0, "missing header line");
    }
    const auto &header = lines[k];
    bool dimacs = header.tokens[0] == "p";
    size_t n = 0;
    size_t m = 0;
    if (dimacs) {
        if (header.tokens.size() != 4) {
            throw ParseError(header.number, "expected 'p edge n m'");
        }
        n = parse_count(header.tokens[2], header.number, "vertex count");
        m = parse_count(header.tokens[3], header.number, "edge count");
    } else {
        if (header.tokens.size() != 2) {
            throw ParseError(header.number, "expected header 'n m'");
        }
        n = parse_count(header.tokens[0], header.number, "vertex count");
        m = parse_count(header.tokens[1], header.number, "edge count");
    }
    if (n > kMaxVertices) {
        throw ParseError(
            header.number,
            "graph has " + std::to_string(n) + " vertices; at most " + std::to_string(kMaxVertices) + " supported");
    }

    std::vector<Edge> edges;
    std::set<Edge> seen;
    for (++k; k < lines.size(); ++k) {
        const auto &line = lines[k];
        std::span<const std::string_view> tok(line.tokens);
        if (dimacs) {
            if (tok[0] == "c") {
                continue;
            }
            if (tok[0] != "e" || tok.size() != 3) {
                throw ParseError(line.number, "expected 'e u v'");
            }
            tok = tok.subspan(1);
        } else if (tok.size() != 2) {
            throw ParseError(line.number, "expected edge 'u v'");
        }
        Vertex u = parse_label(tok[0], n, line.number, "vertex");
        Vertex v = parse_label(tok[1], n, line.number, "vertex");
        if (u == v) {
            throw ParseError(line.number, "self-loop at vertex " + std::to_string(u + 1));
        }
        Edge e = Edge::make(u, v);
        if (!seen.insert(e).second) {
            throw ParseError(
                line.number, "duplicate edge {" + std::to_string(e.u + 1) + "," + std::to_string(e.v + 1) + "}");
        }
        edges.push_back(e);
    }
    if (edges.size() != m) {
        throw ParseError(
            header.number,
            "header declares " + std::to_string(m) + " edges but " + std::to_string(edges.size()) + " were given");
    }
    return Graph::from_edges(n, edges);
}

std::string format_graph(const Graph &g) {
    std::ostringstream out;
    out << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (const Edge &e : g.edges()) {
        out << e.u + 1 << ' ' << e.v + 1 << '\n';
    }
    return out.str();
}

}  // namespace parityforge
