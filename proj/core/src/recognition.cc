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


#include "parityforge/recognition.h"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "parityforge/structure.h"

namespace parityforge {

namespace {

constexpr Vertex kNone = std::numeric_limits<Vertex>::max();

/// Backtracking over orderings of one connected component.
///
/// Each (vertex, block) incidence owns a slot holding the most recently
/// placed later neighbour of that vertex inside that block. Blocks through
/// v correspond to the components of G - v that meet N(v), so the slot is
/// exactly the predecessor of the next later neighbour in that component.
class OrderingSearch {
   public:
    OrderingSearch(const Graph &g, uint64_t budget) : g_(g), budget_(budget) {
        size_t n = g.num_vertices();
        auto bic = biconnected(g);
        std::vector<uint32_t> edge_block(g.num_edges(), 0);
        for (size_t b = 0; b < bic.block_edges.size(); ++b) {
            for (const Edge &e : bic.block_edges[b]) {
                edge_block[g.edge_index(e.u, e.v)] = static_cast<uint32_t>(b);
            }
        }
        std::unordered_map<uint64_t, uint32_t> slot_of;
        uint32_t next_slot = 0;
        auto slot = [&](Vertex v, uint32_t b) {
            uint64_t key = uint64_t{v} * bic.blocks.size() + b;
            auto [it, inserted] = slot_of.emplace(key, next_slot);
            if (inserted) {
                ++next_slot;
            }
            return it->second;
        };
        slots_.resize(n);
        for (Vertex w = 0; w < n; ++w) {
            for (Vertex v : g.neighbors(w)) {
                slots_[w].push_back(slot(v, edge_block[g.edge_index(v, w)]));
            }
        }
        last_.assign(next_slot, kNone);
        placed_.assign(n, false);
    }

    /// Searches for a valid ordering of `verts`; appends it to `out` on
    /// success. Returns nullopt when the budget ran out.
    std::optional<bool> run(const std::vector<Vertex> &verts, std::vector<Vertex> &out) {
        verts_ = &verts;
        prefix_.clear();
        exhausted_ = false;
        bool found = extend();
        if (exhausted_) {
            return std::nullopt;
        }
        if (found) {
            out.insert(out.end(), prefix_.begin(), prefix_.end());
        }
        return found;
    }

    uint64_t explored() const {
        return explored_;
    }

   private:
    bool extend() {
        if (prefix_.size() == verts_->size()) {
            return true;
        }
        for (Vertex w : *verts_) {
            if (placed_[w]) {
                continue;
            }
            if (explored_ >= budget_) {
                exhausted_ = true;
                return false;
            }
            ++explored_;
            size_t mark = undo_.size();
            if (!place(w)) {
                rollback(mark);
                continue;
            }
            placed_[w] = true;
            prefix_.push_back(w);
            if (extend()) {
                return true;
            }
            prefix_.pop_back();
            placed_[w] = false;
            rollback(mark);
            if (exhausted_) {
                return false;
            }
        }
        return false;
    }

    bool place(Vertex w) {
        auto nbrs = g_.neighbors(w);
        for (size_t i = 0; i < nbrs.size(); ++i) {
            if (!placed_[nbrs[i]]) {
                continue;
            }
            uint32_t s = slots_[w][i];
            Vertex prev = last_[s];
            if (prev != kNone && !g_.has_edge(prev, w)) {
                return false;
            }
            undo_.emplace_back(s, prev);
            last_[s] = w;
        }
        return true;
    }

    void rollback(size_t mark) {
        while (undo_.size() > mark) {
            last_[undo_.back().first] = undo_.back().second;
            undo_.pop_back();
        }
    }

    const Graph &g_;
    uint64_t budget_;
    uint64_t explored_ = 0;
    bool exhausted_ = false;
    std::vector<std::vector<uint32_t>> slots_;
    std::vector<Vertex> last_;
    std::vector<bool> placed_;
    std::vector<std::pair<uint32_t, Vertex>> undo_;
    std::vector<Vertex> prefix_;
    const std::vector<Vertex> *verts_ = nullptr;
};

RecognitionResult accept(const Graph &g, Ordering witness, RecognitionMethod method) {
    if (!is_pco(g, witness)) {
        throw std::logic_error("recognizer produced an ordering that fails the PCO check");
    }
    RecognitionResult r;
    r.membership = Membership::kYes;
    r.witness = std::move(witness);
    r.method = method;
    return r;
}

}  // namespace

std::string_view membership_name(Membership m) {
    switch (m) {
        case Membership::kYes:
            return "true";
        case Membership::kNo:
            return "false";
        case Membership::kUnknown:
            return "unknown";
    }
    return "unknown";
}

std::string_view recognition_method_name(RecognitionMethod m) {
    switch (m) {
        case RecognitionMethod::kChordal:
            return "chordal";
        case RecognitionMethod::kUniversal:
            return "universal";
        case RecognitionMethod::kBrute:
            return "brute";
        case RecognitionMethod::kConstructed:
            return "constructed";
    }
    return "unknown";
}

std::vector<Vertex> universal_vertices(const Graph &g) {
    std::vector<Vertex> out;
    size_t n = g.num_vertices();
    for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) + 1 == n) {
            out.push_back(v);
        }
    }
    return out;
}

Ordering pco_from_universal(const Graph &g, const std::vector<Vertex> &universal_set) {
    size_t n = g.num_vertices();
    std::vector<bool> in_set(n, false);
    for (Vertex u : universal_set) {
        if (u >= n) {
            throw std::invalid_argument("vertex " + std::to_string(u + 1) + " out of range");
        }
        if (g.degree(u) + 1 != n) {
            throw std::invalid_argument("vertex " + std::to_string(u + 1) + " is not universal");
        }
        if (in_set[u]) {
            throw std::invalid_argument("vertex " + std::to_string(u + 1) + " listed twice");
        }
        in_set[u] = true;
    }
    if (universal_set.size() < n / 2) {
        throw std::invalid_argument("need at least " + std::to_string(n / 2) + " universal vertices, got " +
                                    std::to_string(universal_set.size()));
    }
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < n; ++v) {
        if (!in_set[v]) {
            rest.push_back(v);
        }
    }
    std::vector<Vertex> seq;
    seq.reserve(n);
    size_t a = 0;
    size_t b = 0;
    while (a < rest.size() || b < universal_set.size()) {
        if (a < rest.size()) {
            seq.push_back(rest[a++]);
        }
        if (b < universal_set.size()) {
            seq.push_back(universal_set[b++]);
        }
    }
    return Ordering::from_sequence(std::move(seq));
}

RecognitionResult recognize_brute(const Graph &g, uint64_t budget) {
    auto comps = components(g);
    std::vector<std::vector<Vertex>> members(comps.count);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        members[comps.component_id[v]].push_back(v);
    }
    OrderingSearch search(g, budget);
    std::vector<Vertex> seq;
    RecognitionResult r;
    r.method = RecognitionMethod::kBrute;
    for (const auto &verts : members) {
        std::optional<bool> found = search.run(verts, seq);
        r.explored = search.explored();
        if (!found) {
            r.membership = Membership::kUnknown;
            return r;
        }
        if (!*found) {
            r.membership = Membership::kNo;
            return r;
        }
    }
    RecognitionResult yes = accept(g, Ordering::from_sequence(std::move(seq)), RecognitionMethod::kBrute);
    yes.explored = search.explored();
    return yes;
}

RecognitionResult recognize(const Graph &g, uint64_t budget) {
    if (auto peo = lexbfs_peo(g)) {
        return accept(g, std::move(*peo), RecognitionMethod::kChordal);
    }
    auto universal = universal_vertices(g);
    if (universal.size() >= g.num_vertices() / 2) {
        return accept(g, pco_from_universal(g, universal), RecognitionMethod::kUniversal);
    }
    return recognize_brute(g, budget);
}

}  // namespace parityforge
