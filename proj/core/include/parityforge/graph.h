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

#ifndef PARITYFORGE_GRAPH_H
#define PARITYFORGE_GRAPH_H

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace parityforge {

/// Vertex index. Internally 0-based; every text format uses 1-based labels.
using Vertex = uint32_t;

/// Largest supported vertex (and wire) count.
inline constexpr size_t kMaxVertices = 4096;

/// Undirected edge stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    static Edge make(Vertex a, Vertex b) {
        return a < b ? Edge{a, b} : Edge{b, a};
    }
    auto operator<=>(const Edge &) const = default;
};

/// Thrown by the text readers; `line()` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
   public:
    ParseError(size_t line, const std::string &what);
    size_t line() const {
        return line_;
    }

   private:
    size_t line_;
};

/// Simple undirected graph. Immutable once built.
///
/// Adjacency lists are strictly increasing and the edge list is sorted, so
/// `has_edge` is a binary search over the shorter endpoint list.
class Graph {
   public:
    Graph() = default;

    /// Edgeless graph on n vertices.
    explicit Graph(size_t n);

    /// Validates simplicity: throws std::invalid_argument on a self-loop,
    /// a repeated edge, an endpoint >= n, or n > kMaxVertices.
    static Graph from_edges(size_t n, std::span<const Edge> edges);

    size_t num_vertices() const {
        return adj_.size();
    }
    size_t num_edges() const {
        return edges_.size();
    }
    std::span<const Vertex> neighbors(Vertex v) const {
        return adj_[v];
    }
    /// Indices into edges(), parallel to neighbors(v).
    std::span<const uint32_t> incident_edges(Vertex v) const {
        return inc_[v];
    }
    size_t degree(Vertex v) const {
        return adj_[v].size();
    }
    const std::vector<Edge> &edges() const {
        return edges_;
    }

    bool has_edge(Vertex a, Vertex b) const;

    /// Position of {a,b} in edges(), or num_edges() if absent.
    size_t edge_index(Vertex a, Vertex b) const;

    bool operator==(const Graph &other) const {
        return adj_.size() == other.adj_.size() && edges_ == other.edges_;
    }

   private:
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::vector<uint32_t>> inc_;
    std::vector<Edge> edges_;
};

/// Reads the edge-list format:
///
///     n m
///     u v        (m lines, 1 <= u,v <= n, u != v)
///
/// '#' starts a comment. DIMACS-style input ("p edge n m" header, "e u v"
/// edge lines, "c" comment lines) is accepted too. Errors carry the line.
Graph parse_graph(std::string_view text);

/// Canonical edge-list text: header then edges in sorted order, 1-based.
std::string format_graph(const Graph &g);

}  // namespace parityforge

#endif  // PARITYFORGE_GRAPH_H
