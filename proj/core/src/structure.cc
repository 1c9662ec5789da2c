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

#include "parityforge/structure.h"

#include <algorithm>
#include <limits>
#include <map>

#include "block_slots.h"

namespace parityforge {

ComponentDecomposition components(const Graph &g) {
    constexpr uint32_t kUnset = std::numeric_limits<uint32_t>::max();
    size_t n = g.num_vertices();
    ComponentDecomposition out;
    out.component_id.assign(n, kUnset);
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; ++s) {
        if (out.component_id[s] != kUnset) {
            continue;
        }
        uint32_t id = static_cast<uint32_t>(out.count++);
        out.component_id[s] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(v)) {
                if (out.component_id[w] == kUnset) {
                    out.component_id[w] = id;
                    stack.push_back(w);
                }
            }
        }
    }
    return out;
}

namespace internal {

BlockLabels label_blocks(const Graph &g) {
    constexpr uint32_t kUnvisited = std::numeric_limits<uint32_t>::max();
    size_t n = g.num_vertices();
    size_t m = g.num_edges();
    BlockLabels out;
    out.edge_block.assign(m, 0);
    out.is_cut.assign(n, false);
    std::vector<uint32_t> disc(n, kUnvisited);
    std::vector<uint32_t> low(n, 0);
    std::vector<uint32_t> edge_stack;

    struct Frame {
        Vertex v;
        Vertex parent;
        size_t next;
        /// Tree edge from parent to v.
        uint32_t up;
    };
    std::vector<Frame> frames;
    uint32_t clock = 0;
    uint32_t num_blocks = 0;

    auto emit_block = [&](uint32_t stop) {
        while (true) {
            uint32_t e = edge_stack.back();
            edge_stack.pop_back();
            out.edge_block[e] = num_blocks;
            if (e == stop) {
                break;
            }
        }
        ++num_blocks;
    };

    for (Vertex root = 0; root < n; ++root) {
        if (disc[root] != kUnvisited) {
            continue;
        }
        if (g.degree(root) == 0) {
            disc[root] = clock++;
            out.isolated.emplace_back(num_blocks++, root);
            continue;
        }
        size_t root_children = 0;
        disc[root] = low[root] = clock++;
        frames.push_back({root, root, 0, 0});
        while (!frames.empty()) {
            Frame &f = frames.back();
            auto nbrs = g.neighbors(f.v);
            if (f.next < nbrs.size()) {
                size_t slot = f.next++;
                Vertex w = nbrs[slot];
                uint32_t e = g.incident_edges(f.v)[slot];
                if (disc[w] == kUnvisited) {
                    edge_stack.push_back(e);
                    disc[w] = low[w] = clock++;
                    if (f.v == root) {
                        ++root_children;
                    }
                    frames.push_back({w, f.v, 0, e});
                } else if (w != f.parent && disc[w] < disc[f.v]) {
                    edge_stack.push_back(e);
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
                continue;
            }
            Vertex w = f.v;
            Vertex v = f.parent;
            uint32_t up = f.up;
            frames.pop_back();
            if (frames.empty()) {
                break;
            }
            low[v] = std::min(low[v], low[w]);
            if (low[w] >= disc[v]) {
                if (v != root) {
                    out.is_cut[v] = true;
                }
                emit_block(up);
            }
        }
        if (root_children >= 2) {
            out.is_cut[root] = true;
        }
    }
    out.num_blocks = num_blocks;
    return out;
}

}  // namespace internal

BiconnectedDecomposition biconnected(const Graph &g) {
    internal::BlockLabels labels = internal::label_blocks(g);
    size_t n = g.num_vertices();
    uint32_t num_blocks = labels.num_blocks;
    BiconnectedDecomposition out;

    // Counting passes give sorted vertex and edge lists without sorting.
    out.blocks.resize(num_blocks);
    out.block_edges.resize(num_blocks);
    for (auto [b, v] : labels.isolated) {
        out.blocks[b].push_back(v);
    }
    for (size_t e = 0; e < g.num_edges(); ++e) {
        out.block_edges[labels.edge_block[e]].push_back(g.edges()[e]);
    }
    std::vector<uint32_t> stamp(num_blocks, std::numeric_limits<uint32_t>::max());
    for (Vertex v = 0; v < n; ++v) {
        for (uint32_t e : g.incident_edges(v)) {
            uint32_t b = labels.edge_block[e];
            if (stamp[b] != v) {
                stamp[b] = v;
                out.blocks[b].push_back(v);
            }
        }
        if (labels.is_cut[v]) {
            out.cut_vertices.push_back(v);
        }
    }
    out.edge_block = std::move(labels.edge_block);
    return out;
}

std::optional<size_t> girth(const Graph &g) {
    constexpr uint32_t kFar = std::numeric_limits<uint32_t>::max();
    size_t n = g.num_vertices();
    size_t best = std::numeric_limits<size_t>::max();
    std::vector<uint32_t> dist(n, kFar);
    std::vector<Vertex> parent(n, 0);
    std::vector<Vertex> queue;
    queue.reserve(n);
    for (Vertex s = 0; s < n; ++s) {
        queue.clear();
        queue.push_back(s);
        dist[s] = 0;
        parent[s] = s;
        for (size_t head = 0; head < queue.size(); ++head) {
            Vertex u = queue[head];
            if (2 * static_cast<size_t>(dist[u]) + 1 >= best) {
                break;
            }
            for (Vertex w : g.neighbors(u)) {
                if (dist[w] == kFar) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if (w != parent[u]) {
                    best = std::min<size_t>(best, static_cast<size_t>(dist[u]) + dist[w] + 1);
                }
            }
        }
        for (Vertex v : queue) {
            dist[v] = kFar;
        }
    }
    if (best == std::numeric_limits<size_t>::max()) {
        return std::nullopt;
    }
    return best;
}

std::vector<std::vector<Vertex>> false_twin_classes(const Graph &g) {
    std::map<std::vector<Vertex>, size_t> index;
    std::vector<std::vector<Vertex>> classes;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        auto nbrs = g.neighbors(v);
        std::vector<Vertex> key(nbrs.begin(), nbrs.end());
        auto [it, inserted] = index.emplace(std::move(key), classes.size());
        if (inserted) {
            classes.emplace_back();
        }
        classes[it->second].push_back(v);
    }
    return classes;
}

}  // namespace parityforge
