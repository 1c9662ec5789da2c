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


#include "block_slots.h"

#include <limits>

namespace parityforge::internal {

BlockSlots block_slots(const Graph &g) {
    constexpr uint32_t kNone = std::numeric_limits<uint32_t>::max();
    BlockSlots out;
    out.labels = label_blocks(g);
    const auto &edge_block = out.labels.edge_block;
    size_t m = g.num_edges();
    out.at_u.assign(m, kNone);
    out.at_v.assign(m, kNone);
    out.vertex.reserve(2 * m);
    out.block.reserve(2 * m);
    std::vector<uint32_t> stamp(out.labels.num_blocks, kNone);
    std::vector<uint32_t> current(out.labels.num_blocks, kNone);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        for (uint32_t e : g.incident_edges(v)) {
            uint32_t b = edge_block[e];
            if (stamp[b] != v) {
                stamp[b] = v;
                current[b] = static_cast<uint32_t>(out.vertex.size());
                out.vertex.push_back(v);
                out.block.push_back(b);
            }
            (g.edges()[e].u == v ? out.at_u : out.at_v)[e] = current[b];
        }
    }
    return out;
}

}  // namespace parityforge::internal
