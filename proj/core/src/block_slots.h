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


#ifndef PARITYFORGE_SRC_BLOCK_SLOTS_H
#define PARITYFORGE_SRC_BLOCK_SLOTS_H

#include <cstdint>
#include <utility>
#include <vector>

#include "parityforge/graph.h"
#include "parityforge/ordering.h"

namespace parityforge::internal {

/// Block membership without per-block lists. Isolated vertices get block
/// ids of their own, numbered in DFS order with the rest.
struct BlockLabels {
    std::vector<uint32_t> edge_block;
    uint32_t num_blocks = 0;
    std::vector<bool> is_cut;
    /// (block id, vertex) for each isolated vertex.
    std::vector<std::pair<uint32_t, Vertex>> isolated;
};

/// Iterative lowpoint DFS, O(n + m).
BlockLabels label_blocks(const Graph &g);

/// Dense numbering of the (vertex, block) incidences of blocks with edges.
/// Lets per-block algorithms run on flat arrays in O(n + m) total.
struct BlockSlots {
    BlockLabels labels;
    std::vector<Vertex> vertex;
    std::vector<uint32_t> block;
    /// For edge e = {u < v}: the slot of u, resp. v, in e's block.
    std::vector<uint32_t> at_u;
    std::vector<uint32_t> at_v;

    size_t size() const {
        return vertex.size();
    }
    /// Slot of endpoint `x` of edge e.
    uint32_t of(const Graph &g, uint32_t e, Vertex x) const {
        return g.edges()[e].u == x ? at_u[e] : at_v[e];
    }
};

BlockSlots block_slots(const Graph &g);

/// check_pco on precomputed slots.
PcoCheck check_pco(const Graph &g, const Ordering &order, const BlockSlots &slots);

}  // namespace parityforge::internal

#endif  // PARITYFORGE_SRC_BLOCK_SLOTS_H
