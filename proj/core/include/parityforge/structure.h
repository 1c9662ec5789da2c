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

#ifndef PARITYFORGE_STRUCTURE_H
#define PARITYFORGE_STRUCTURE_H

#include <optional>
#include <vector>

#include "parityforge/graph.h"

namespace parityforge {

struct ComponentDecomposition {
    /// Contiguous ids 0..count-1, numbered in order of smallest vertex.
    std::vector<uint32_t> component_id;
    size_t count = 0;
};

ComponentDecomposition components(const Graph &g);

/// Blocks (maximal biconnected subgraphs) and articulation points.
///
/// Every edge belongs to exactly one block; `block_edges[b]` lists them.
/// An isolated vertex forms a singleton block with no edges, so every
/// vertex appears in at least one block. Blocks are sorted vertex lists.
struct BiconnectedDecomposition {
    std::vector<std::vector<Vertex>> blocks;
    /// Sorted like edges().
    std::vector<std::vector<Edge>> block_edges;
    /// Block id of each edge, indexed like Graph::edges().
    std::vector<uint32_t> edge_block;
    /// Sorted.
    std::vector<Vertex> cut_vertices;
};

/// Hopcroft-Tarjan lowpoint decomposition, iterative, O(n + m).
BiconnectedDecomposition biconnected(const Graph &g);

/// Length of a shortest cycle; nullopt for forests. Per-vertex BFS, O(n m).
std::optional<size_t> girth(const Graph &g);

/// Partition of V into classes of identical open neighborhoods. Classes
/// are sorted, and ordered by their smallest member.
std::vector<std::vector<Vertex>> false_twin_classes(const Graph &g);

}  // namespace parityforge

#endif  // PARITYFORGE_STRUCTURE_H
