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

#include "parityforge/ordering.h"

#include <algorithm>
#include <limits>
#include <sstream>

#include "block_slots.h"
#include "text_util.h"

namespace parityforge {

Ordering Ordering::from_sequence(std::vector<Vertex> sequence) {
    Ordering out;
    size_t n = sequence.size();
    out.position_.assign(n, std::numeric_limits<uint32_t>::max());
    for (size_t p = 0; p < n; ++p) {
        Vertex v = sequence[p];
        if (v >= n) {
            throw std::invalid_argument("ordering entry " + std::to_string(v + 1) + " out of range");
        }
        if (out.position_[v] != std::numeric_limits<uint32_t>::max()) {
            throw std::invalid_argument("ordering repeats vertex " + std::to_string(v + 1));
        }
        out.position_[v] = static_cast<uint32_t>(p);
    }
    out.sequence_ = std::move(sequence);
    return out;
}

Ordering Ordering::identity(size_t n) {
    std::vector<Vertex> seq(n);
    for (size_t i = 0; i < n; ++i) {
        seq[i] = static_cast<Vertex>(i);
    }
    return from_sequence(std::move(seq));
}

Ordering Ordering::reversed() const {
    return from_sequence(std::vector<Vertex>(sequence_.rbegin(), sequence_.rend()));
}

bool is_sigma_linked(const Graph &g, const Ordering &order, std::span<const Vertex> subset) {
    if (subset.size() <= 1) {
        return true;
    }
    std::vector<Vertex> sorted(subset.begin(), subset.end());
    std::sort(sorted.begin(), sorted.end(), [&](Vertex a, Vertex b) { return order.before(a, b); });
    for (size_t i = 0; i + 1 < sorted.size(); ++i) {
        if (!g.has_edge(sorted[i], sorted[i + 1])) {
            return false;
        }
    }
    return true;
}

namespace {

std::vector<Vertex> component_avoiding(const Graph &g, Vertex removed, Vertex start) {
    std::vector<bool> seen(g.num_vertices(), false);
    seen[removed] = true;
    seen[start] = true;
    std::vector<Vertex> stack{start};
    std::vector<Vertex> out;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        out.push_back(v);
        for (Vertex w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

PcoCheck check_pco(const Graph &g, const Ordering &order) {
    if (order.size() != g.num_vertices()) {
        throw std::invalid_argument("ordering size does not match vertex count");
    }
    return internal::check_pco(g, order, internal::block_slots(g));
}

PcoCheck internal::check_pco(const Graph &g, const Ordering &order, const BlockSlots &slots) {
    size_t n = g.num_vertices();
    constexpr uint32_t kNone = std::numeric_limits<uint32_t>::max();

    // Sweep vertices in order; last[s] is the latest later-neighbour seen so
    // far of slot s. Each consecutive pair becomes an adjacency query.
    struct Query {
        Vertex earlier;
        Vertex later;
        Vertex owner;
    };
    std::vector<uint32_t> last(slots.size(), kNone);
    std::vector<Query> queries;
    for (size_t p = 0; p < n; ++p) {
        Vertex w = order.at(p);
        auto nbrs = g.neighbors(w);
        auto inc = g.incident_edges(w);
        for (size_t i = 0; i < nbrs.size(); ++i) {
            Vertex v = nbrs[i];
            if (order.position(v) >= p) {
                continue;
            }
            uint32_t s = slots.of(g, inc[i], v);
            if (last[s] != kNone) {
                queries.push_back({last[s], w, v});
            }
            last[s] = w;
        }
    }

    // Answer all queries with one marking pass per distinct earlier endpoint.
    std::vector<uint32_t> start(n + 1, 0);
    for (const Query &q : queries) {
        ++start[q.earlier + 1];
    }
    for (size_t v = 0; v < n; ++v) {
        start[v + 1] += start[v];
    }
    std::vector<uint32_t> fill(start.begin(), start.end() - 1);
    std::vector<uint32_t> bucket(queries.size());
    for (uint32_t i = 0; i < queries.size(); ++i) {
        bucket[fill[queries[i].earlier]++] = i;
    }
    std::vector<uint32_t> mark(n, kNone);
    size_t worst_pos = std::numeric_limits<size_t>::max();
    Vertex worst_vertex = 0;
    Vertex worst_witness = 0;
    for (Vertex a = 0; a < n; ++a) {
        if (start[a] == start[a + 1]) {
            continue;
        }
        for (Vertex x : g.neighbors(a)) {
            mark[x] = a;
        }
        for (uint32_t k = start[a]; k < start[a + 1]; ++k) {
            const Query &q = queries[bucket[k]];
            if (mark[q.later] != a && order.position(q.owner) < worst_pos) {
                worst_pos = order.position(q.owner);
                worst_vertex = q.owner;
                worst_witness = q.earlier;
            }
        }
    }
    PcoCheck result;
    if (worst_pos == std::numeric_limits<size_t>::max()) {
        result.ok = true;
        return result;
    }
    result.violation = PcoViolation{worst_vertex, component_avoiding(g, worst_vertex, worst_witness)};
    return result;
}

bool is_peo(const Graph &g, const Ordering &order) {
    size_t n = g.num_vertices();
    if (order.size() != n) {
        throw std::invalid_argument("ordering size does not match vertex count");
    }
    for (Vertex v = 0; v < n; ++v) {
        Vertex first = 0;
        bool have_first = false;
        for (Vertex w : g.neighbors(v)) {
            if (order.before(v, w) && (!have_first || order.before(w, first))) {
                first = w;
                have_first = true;
            }
        }
        if (!have_first) {
            continue;
        }
        // Later neighbours form a clique iff each of them is adjacent to the earliest one.
        for (Vertex w : g.neighbors(v)) {
            if (w != first && order.before(v, w) && !g.has_edge(first, w)) {
                return false;
            }
        }
    }
    return true;
}

std::optional<Ordering> lexbfs_peo(const Graph &g) {
    size_t n = g.num_vertices();
    if (n == 0) {
        return Ordering::identity(0);
    }
    std::vector<std::vector<Vertex>> cells(1);
    for (Vertex v = 0; v < n; ++v) {
        cells[0].push_back(v);
    }
    std::vector<bool> is_neighbor(n, false);
    std::vector<Vertex> visit;
    visit.reserve(n);
    while (!cells.empty()) {
        Vertex v = cells.front().front();
        cells.front().erase(cells.front().begin());
        if (cells.front().empty()) {
            cells.erase(cells.begin());
        }
        visit.push_back(v);
        for (Vertex w : g.neighbors(v)) {
            is_neighbor[w] = true;
        }
        std::vector<std::vector<Vertex>> refined;
        refined.reserve(cells.size() * 2);
        for (auto &cell : cells) {
            std::vector<Vertex> in;
            std::vector<Vertex> out;
            for (Vertex w : cell) {
                (is_neighbor[w] ? in : out).push_back(w);
            }
            if (!in.empty()) {
                refined.push_back(std::move(in));
            }
            if (!out.empty()) {
                refined.push_back(std::move(out));
            }
        }
        cells = std::move(refined);
        for (Vertex w : g.neighbors(v)) {
            is_neighbor[w] = false;
        }
    }
    Ordering peo = Ordering::from_sequence(std::vector<Vertex>(visit.rbegin(), visit.rend()));
    if (!is_peo(g, peo)) {
        return std::nullopt;
    }
    return peo;
}

Ordering parse_ordering(std::string_view text, size_t n) {
    auto lines = internal::tokenize_lines(text);
    std::vector<Vertex> seq;
    seq.reserve(n);
    for (const auto &line : lines) {
        for (std::string_view tok : line.tokens) {
            seq.push_back(internal::parse_label(tok, n, line.number, "vertex"));
        }
    }
    if (seq.size() != n) {
        throw ParseError(0, "ordering lists " + std::to_string(seq.size()) + " vertices, expected " + std::to_string(n));
    }
    try {
        return Ordering::from_sequence(std::move(seq));
    } catch (const std::invalid_argument &e) {
        throw ParseError(0, e.what());
    }
}

std::string format_ordering(const Ordering &order) {
    std::ostringstream out;
    for (size_t p = 0; p < order.size(); ++p) {
        if (p > 0) {
            out << ' ';
        }
        out << order.at(p) + 1;
    }
    out << '\n';
    return out.str();
}

}  // namespace parityforge
