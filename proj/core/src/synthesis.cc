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

#include "parityforge/synthesis.h"

#include <algorithm>
#include <cassert>
#include <limits>

#include "parityforge/rng.h"
#include "block_slots.h"

namespace parityforge {

namespace {

constexpr uint32_t kNone = std::numeric_limits<uint32_t>::max();

std::string describe(const PcoViolation &v) {
    std::string out = "ordering is not a perfect cancellation ordering: later neighbours of vertex " +
                      std::to_string(v.vertex + 1) + " in component {";
    for (size_t i = 0; i < v.component.size(); ++i) {
        out += (i ? "," : "") + std::to_string(v.component[i] + 1);
    }
    return out + "} of G - v are not linked";
}

#ifndef NDEBUG
// Invariants before step `next` of a block (ranks are positions inside the
// block): partner[j] == kNone means term(j) = {j}; otherwise term(j) =
// {j, partner[j]} with rank j < rank partner[j] < next, the pair adjacent,
// and no neighbour of j ranked strictly between partner[j] and next.
void check_block_invariants(const Graph &g, const internal::BlockSlots &slots,
                            std::span<const uint32_t> seq,
                            const std::vector<uint32_t> &partner, const std::vector<uint32_t> &rank,
                            uint32_t next) {
    for (uint32_t j : seq) {
        uint32_t k = partner[j];
        if (rank[j] >= next) {
            assert(k == kNone);
            continue;
        }
        if (k == kNone) {
            continue;
        }
        assert(rank[j] < rank[k] && rank[k] < next);
        assert(g.has_edge(slots.vertex[j], slots.vertex[k]));
        for (uint32_t e : g.incident_edges(slots.vertex[j])) {
            if (slots.labels.edge_block[e] != slots.block[j]) {
                continue;
            }
            const Edge &edge = g.edges()[e];
            uint32_t w = edge.u == slots.vertex[j] ? slots.at_v[e] : slots.at_u[e];
            assert(!(rank[k] < rank[w] && rank[w] < next));
            (void)w;
        }
    }
}
#endif

}  // namespace

std::string_view method_name(Method method) {
    switch (method) {
        case Method::kTrivial:
            return "trivial";
        case Method::kPco:
            return "pco";
        case Method::kRandom:
            return "random";
    }
    return "unknown";
}

Method parse_method(std::string_view name) {
    if (name == "trivial") {
        return Method::kTrivial;
    }
    if (name == "pco") {
        return Method::kPco;
    }
    if (name == "random") {
        return Method::kRandom;
    }
    throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

NotPcoError::NotPcoError(PcoViolation violation)
    : std::invalid_argument(describe(violation)), violation_(std::move(violation)) {
}

SynthesisResult synth_trivial(const Graph &g) {
    SynthesisResult result;
    result.method = Method::kTrivial;
    result.circuit = Circuit(g.num_vertices());
    for (const Edge &e : g.edges()) {
        result.circuit.append(e.u, e.v);
        result.circuit.append(e.u, e.v);
    }
    result.size = result.circuit.size();
    return result;
}

SynthesisResult synth_pco(const Graph &g, const Ordering &order) {
    if (order.size() != g.num_vertices()) {
        throw std::invalid_argument("ordering has " + std::to_string(order.size()) + " entries but graph has " +
                                    std::to_string(g.num_vertices()) + " vertices");
    }
    auto slots = internal::block_slots(g);
    PcoCheck check = internal::check_pco(g, order, slots);
    if (!check.ok) {
        throw NotPcoError(*check.violation);
    }
    SynthesisResult result;
    result.method = Method::kPco;
    result.ordering = order;
    result.circuit = Circuit(g.num_vertices());
    size_t num_slots = slots.size();
    size_t num_blocks = slots.labels.num_blocks;

    // earlier: per slot, the slots of its earlier neighbours in the block,
    // latest first. Filled by a descending sweep, so no sorting is needed.
    std::vector<uint32_t> earlier_start(num_slots + 1, 0);
    for (uint32_t e = 0; e < g.num_edges(); ++e) {
        const Edge &edge = g.edges()[e];
        ++earlier_start[(order.before(edge.u, edge.v) ? slots.at_v[e] : slots.at_u[e]) + 1];
    }
    for (size_t s = 0; s < num_slots; ++s) {
        earlier_start[s + 1] += earlier_start[s];
    }
    std::vector<uint32_t> fill(earlier_start.begin(), earlier_start.end() - 1);
    std::vector<uint32_t> earlier(earlier_start.back());
    for (size_t p = g.num_vertices(); p-- > 0;) {
        Vertex x = order.at(p);
        auto nbrs = g.neighbors(x);
        auto inc = g.incident_edges(x);
        for (size_t i = 0; i < nbrs.size(); ++i) {
            if (order.position(nbrs[i]) > p) {
                earlier[fill[slots.of(g, inc[i], nbrs[i])]++] = slots.of(g, inc[i], x);
            }
        }
    }

    // seq: slots of each block in order.
    std::vector<uint32_t> block_start(num_blocks + 1, 0);
    for (size_t s = 0; s < num_slots; ++s) {
        ++block_start[slots.block[s] + 1];
    }
    for (size_t b = 0; b < num_blocks; ++b) {
        block_start[b + 1] += block_start[b];
    }
    fill.assign(block_start.begin(), block_start.end() - 1);
    std::vector<uint32_t> seq(num_slots);
    std::vector<uint32_t> rank(num_slots, kNone);
    for (size_t p = 0; p < g.num_vertices(); ++p) {
        Vertex x = order.at(p);
        for (uint32_t e : g.incident_edges(x)) {
            uint32_t s = slots.of(g, e, x);
            if (rank[s] == kNone) {
                uint32_t b = slots.block[s];
                rank[s] = fill[b] - block_start[b];
                seq[fill[b]++] = s;
            }
        }
    }

    std::vector<uint32_t> partner(num_slots, kNone);
    const auto &wire = slots.vertex;
    for (size_t b = 0; b < num_blocks; ++b) {
        std::span<const uint32_t> block(seq.data() + block_start[b], block_start[b + 1] - block_start[b]);
        auto size = static_cast<uint32_t>(block.size());
        if (size <= 1) {
            continue;
        }
        for (uint32_t i = 1; i < size; ++i) {
            uint32_t si = block[i];
            for (uint32_t k = earlier_start[si]; k < earlier_start[si + 1]; ++k) {
                uint32_t j = earlier[k];
                if (partner[j] == kNone) {
                    result.circuit.append(wire[si], wire[j]);
                } else {
                    uint32_t held = partner[j];
                    // term(held) = {held, si} was set earlier in this sweep.
                    assert(partner[held] == si);
                    result.circuit.append(wire[held], wire[j]);
                }
                partner[j] = si;
            }
#ifndef NDEBUG
            check_block_invariants(g, slots, block, partner, rank, i + 1);
#endif
        }
        for (uint32_t i = size - 1; i-- > 0;) {
            uint32_t s = block[i];
            uint32_t j = partner[s];
            if (j == kNone) {
                throw std::logic_error("block restoration found a singleton wire; ordering is not a PCO of the block");
            }
            assert(partner[j] == kNone);
            result.circuit.append(wire[j], wire[s]);
            partner[s] = kNone;
        }
    }
    result.size = result.circuit.size();
    return result;
}

Ordering random_permutation(size_t n, uint64_t seed) {
    std::vector<Vertex> seq(n);
    for (size_t i = 0; i < n; ++i) {
        seq[i] = static_cast<Vertex>(i);
    }
    CounterRng rng(seed);
    rng.shuffle(std::span<Vertex>(seq));
    return Ordering::from_sequence(std::move(seq));
}

SynthesisResult synth_random(const Graph &g, uint64_t seed) {
    SynthesisResult result = synth_random_with_permutation(g, random_permutation(g.num_vertices(), seed));
    result.seed = seed;
    return result;
}

SynthesisResult synth_random_with_permutation(const Graph &g, const Ordering &permutation) {
    size_t n = g.num_vertices();
    if (permutation.size() != n) {
        throw std::invalid_argument("permutation size does not match vertex count");
    }
    SynthesisResult result;
    result.method = Method::kRandom;
    result.permutation = permutation;
    result.circuit = Circuit(n);
    RandomSynthesisStats stats;
    Circuit &c = result.circuit;

    // partner[v] == kNone: term(v) = {v}; otherwise term(v) = {v, partner[v]}.
    std::vector<uint32_t> partner(n, kNone);
    // Per-turn "edge removed" marks over the current vertex's neighbours.
    std::vector<bool> done(n, false);
    std::vector<Vertex> later;
    std::vector<std::pair<size_t, Vertex>> grouped;

    for (size_t turn = 0; turn < n; ++turn) {
        Vertex v = permutation.at(turn);
        later.clear();
        for (Vertex k : g.neighbors(v)) {
            if (permutation.position(k) > turn) {
                later.push_back(k);
            }
        }

        // Triangle phase: term(v) = {v, j}; each later k holding {j, k} becomes {v, k}.
        if (partner[v] != kNone) {
            Vertex j = partner[v];
            for (Vertex k : later) {
                if (partner[k] == j) {
                    c.append(v, k);
                    partner[k] = v;
                    done[k] = true;
                    ++stats.edge_gates;
                }
            }
            c.append(j, v);
            partner[v] = kNone;
            ++stats.resets;
        }

        // Grouped cancellation: later neighbours holding {j, k}, grouped by j
        // in processing order of j.
        grouped.clear();
        for (Vertex k : later) {
            if (!done[k] && partner[k] != kNone) {
                grouped.emplace_back(permutation.position(partner[k]), k);
            }
        }
        std::stable_sort(grouped.begin(), grouped.end(),
                         [](const auto &a, const auto &b) { return a.first < b.first; });
        for (size_t s = 0; s < grouped.size();) {
            Vertex j = permutation.at(grouped[s].first);
            c.append(j, v);
            for (; s < grouped.size() && permutation.at(grouped[s].first) == j; ++s) {
                Vertex k = grouped[s].second;
                c.append(v, k);
                partner[k] = v;
                done[k] = true;
                ++stats.edge_gates;
            }
            c.append(j, v);
            ++stats.grouped_activations;
        }

        // Direct phase.
        for (Vertex k : later) {
            if (!done[k]) {
                assert(partner[k] == kNone);
                c.append(v, k);
                partner[k] = v;
                ++stats.edge_gates;
            }
            done[k] = false;
        }
    }

    assert(stats.edge_gates == g.num_edges());
    assert(c.size() == stats.edge_gates + stats.resets + 2 * stats.grouped_activations);
    result.size = c.size();
    result.random_stats = stats;
    return result;
}

}  // namespace parityforge
