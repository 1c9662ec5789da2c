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

#include "parityforge/graph.h"

#include <algorithm>

namespace parityforge {

namespace {

std::string with_line(size_t line, const std::string &what) {
    if (line == 0) {
        return what;
    }
    return "line " + std::to_string(line) + ": " + what;
}

}  // namespace

ParseError::ParseError(size_t line, const std::string &what) : std::runtime_error(with_line(line, what)), line_(line) {
}

Graph::Graph(size_t n) {
    if (n > kMaxVertices) {
        throw std::invalid_argument(
            "graph has " + std::to_string(n) + " vertices; at most " + std::to_string(kMaxVertices) + " supported");
    }
    adj_.resize(n);
    inc_.resize(n);
}

Graph Graph::from_edges(size_t n, std::span<const Edge> edges) {
    Graph g(n);
    g.edges_.reserve(edges.size());
    for (const Edge &e : edges) {
        if (e.u >= n || e.v >= n) {
            throw std::invalid_argument("edge endpoint out of range");
        }
        if (e.u == e.v) {
            throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u + 1));
        }
        g.edges_.push_back(Edge::make(e.u, e.v));
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
    if (dup != g.edges_.end()) {
        throw std::invalid_argument(
            "duplicate edge {" + std::to_string(dup->u + 1) + "," + std::to_string(dup->v + 1) + "}");
    }
    // With edges sorted by (u, v), every list receives its smaller neighbors
    // first (ascending) and then its larger ones (ascending): already sorted.
    for (size_t i = 0; i < g.edges_.size(); ++i) {
        const Edge &e = g.edges_[i];
        g.adj_[e.u].push_back(e.v);
        g.adj_[e.v].push_back(e.u);
        g.inc_[e.u].push_back(static_cast<uint32_t>(i));
        g.inc_[e.v].push_back(static_cast<uint32_t>(i));
    }
    return g;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
    if (a == b || a >= adj_.size() || b >= adj_.size()) {
        return false;
    }
    const auto &list = adj_[a].size() <= adj_[b].size() ? adj_[a] : adj_[b];
    Vertex other = adj_[a].size() <= adj_[b].size() ? b : a;
    return std::binary_search(list.begin(), list.end(), other);
}

size_t Graph::edge_index(Vertex a, Vertex b) const {
    if (a == b) {
        return edges_.size();
    }
    Edge key = Edge::make(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key) {
        return edges_.size();
    }
    return static_cast<size_t>(it - edges_.begin());
}

}  // namespace parityforge
