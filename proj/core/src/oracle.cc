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


#include "parityforge/oracle.h"

#include <algorithm>
#include <array>
#include <bit>
#include <deque>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "parityforge/ordering.h"
#include "parityforge/structure.h"

namespace parityforge {

BoundReport bounds(const Graph &g) {
    BoundReport r;
    size_t n = g.num_vertices();
    size_t m = g.num_edges();
    r.basic_lower = m + n - components(g).count;
    r.trivial_upper = 2 * m;
    r.girth = girth(g);
    if (m > 0 && (!r.girth || *r.girth >= 5)) {
        r.girth5_lower = m + m / 6 + 1;
        r.girth5_sixths = 7 * m;
    }
    return r;
}

WitnessShape witness_shape(const Circuit &c) {
    WitnessShape s;
    s.terms_at_most_binary = true;
    s.inputs_stay_on_wire = true;
    std::vector<bool> controls(c.num_wires(), false);
    for (const Gate &gate : c.gates()) {
        controls[gate.control] = true;
    }
    s.has_unused_control_wire = std::find(controls.begin(), controls.end(), false) != controls.end();
    simulate_each(c, [&](size_t, Vertex wire, const Term &term) {
        if (term.count() > 2) {
            s.terms_at_most_binary = false;
        }
        if (!term.contains(wire)) {
            s.inputs_stay_on_wire = false;
        }
    });
    return s;
}

namespace {

constexpr unsigned kRowBits = 5;

/// Wire matrix packed as n rows of kRowBits bits; row i is wire i's term.
struct SmallState {
    uint32_t rows = 0;
    uint32_t covered = 0;
};

uint32_t row(uint32_t rows, unsigned i) {
    return (rows >> (kRowBits * i)) & ((1u << kRowBits) - 1);
}

struct Problem {
    unsigned n = 0;
    uint32_t all_edges = 0;
    uint32_t identity = 0;
    /// edge_of[mask] = bit of that edge in `covered`, or 0.
    std::array<uint32_t, 1u << kRowBits> edge_of{};
    std::vector<Gate> moves;

    explicit Problem(const Graph &g) : n(static_cast<unsigned>(g.num_vertices())) {
        for (size_t e = 0; e < g.num_edges(); ++e) {
            const Edge &edge = g.edges()[e];
            edge_of[(1u << edge.u) | (1u << edge.v)] = 1u << e;
            all_edges |= 1u << e;
        }
        for (unsigned i = 0; i < n; ++i) {
            identity |= (1u << i) << (kRowBits * i);
        }
        for (Vertex c = 0; c < n; ++c) {
            for (Vertex t = 0; t < n; ++t) {
                if (c != t) {
                    moves.push_back({c, t});
                }
            }
        }
    }

    unsigned heuristic(const SmallState &s) const {
        unsigned wrong = 0;
        for (unsigned i = 0; i < n; ++i) {
            wrong += row(s.rows, i) != (1u << i);
        }
        return static_cast<unsigned>(std::popcount(all_edges & ~s.covered)) + wrong;
    }

    SmallState apply(const SmallState &s, const Gate &gate) const {
        uint32_t updated = row(s.rows, gate.target) ^ row(s.rows, gate.control);
        SmallState out;
        out.rows = (s.rows & ~(((1u << kRowBits) - 1) << (kRowBits * gate.target))) |
                   (updated << (kRowBits * gate.target));
        out.covered = s.covered | edge_of[updated];
        return out;
    }
};

/// Lossy fixed-size transposition table: a missing entry only costs pruning.
class TranspositionTable {
   public:
    explicit TranspositionTable(size_t log2_capacity)
        : keys_(size_t{1} << log2_capacity, kEmpty), depth_(size_t{1} << log2_capacity, 0),
          mask_((size_t{1} << log2_capacity) - 1) {
    }

    void clear() {
        std::fill(keys_.begin(), keys_.end(), kEmpty);
    }

    /// True when the key was already seen at depth <= `depth`; records it otherwise.
    bool seen_or_insert(uint64_t key, uint8_t depth) {
        size_t slot = static_cast<size_t>((key * 0x9e3779b97f4a7c15ULL) >> 20) & mask_;
        if (keys_[slot] == key && depth_[slot] <= depth) {
            return true;
        }
        keys_[slot] = key;
        depth_[slot] = depth;
        return false;
    }

   private:
    static constexpr uint64_t kEmpty = std::numeric_limits<uint64_t>::max();
    std::vector<uint64_t> keys_;
    std::vector<uint8_t> depth_;
    size_t mask_;
};

class IdaStar {
   public:
    IdaStar(const Problem &problem, uint64_t budget) : pr_(problem), budget_(budget), table_(20) {
    }

    OracleResult run(size_t limit) {
        OracleResult result;
        SmallState start{pr_.identity, 0};
        unsigned bound = pr_.heuristic(start);
        while (true) {
            if (bound > limit) {
                result.status = OracleStatus::kNoneWithinLimit;
                break;
            }
            table_.clear();
            next_bound_ = std::numeric_limits<unsigned>::max();
            path_.clear();
            bool found = dfs(start, 0, bound, kNoMove);
            if (exhausted_) {
                result.status = OracleStatus::kBudgetExhausted;
                break;
            }
            if (found) {
                result.status = OracleStatus::kOptimal;
                result.min_size = path_.size();
                result.witness = Circuit(pr_.n, path_);
                result.shape = witness_shape(result.witness);
                break;
            }
            if (next_bound_ == std::numeric_limits<unsigned>::max()) {
                result.status = OracleStatus::kNoneWithinLimit;
                break;
            }
            bound = next_bound_;
        }
        result.explored = explored_;
        return result;
    }

   private:
    static constexpr unsigned kNoMove = 31;

    /// Adjacent gates with distinct targets that touch neither other's
    /// target produce the same terms in either order; keep one order.
    static bool commute(const Gate &a, const Gate &b) {
        return a.target != b.target && a.target != b.control && b.target != a.control;
    }

    bool dfs(const SmallState &s, unsigned depth, unsigned bound, unsigned prev) {
        unsigned f = depth + pr_.heuristic(s);
        if (f > bound) {
            next_bound_ = std::min(next_bound_, f);
            return false;
        }
        if (s.rows == pr_.identity && s.covered == pr_.all_edges) {
            return true;
        }
        uint64_t key = uint64_t{s.rows} | (uint64_t{s.covered} << 25) | (uint64_t{prev} << 40);
        if (table_.seen_or_insert(key, static_cast<uint8_t>(depth))) {
            return false;
        }
        for (unsigned k = 0; k < pr_.moves.size(); ++k) {
            const Gate &gate = pr_.moves[k];
            if (prev != kNoMove && k < prev && commute(gate, pr_.moves[prev])) {
                continue;
            }
            if (++explored_ > budget_) {
                exhausted_ = true;
                return false;
            }
            path_.push_back(gate);
            if (dfs(pr_.apply(s, gate), depth + 1, bound, k)) {
                return true;
            }
            path_.pop_back();
            if (exhausted_) {
                return false;
            }
        }
        return false;
    }

    const Problem &pr_;
    uint64_t budget_;
    uint64_t explored_ = 0;
    bool exhausted_ = false;
    unsigned next_bound_ = 0;
    std::vector<Gate> path_;
    TranspositionTable table_;
};

void check_oracle_input(const Graph &g) {
    if (g.num_vertices() > kOracleMaxVertices) {
        throw std::invalid_argument("oracle supports at most " + std::to_string(kOracleMaxVertices) +
                                    " vertices, got " + std::to_string(g.num_vertices()));
    }
}

}  // namespace

OracleResult oracle_min_size(const Graph &g, size_t limit, uint64_t budget) {
    check_oracle_input(g);
    if (limit == 0) {
        limit = 2 * g.num_edges();
    }
    Problem problem(g);
    IdaStar search(problem, budget);
    return search.run(limit);
}

std::optional<size_t> oracle_min_size_bfs(const Graph &g, size_t limit) {
    check_oracle_input(g);
    if (limit == 0) {
        limit = 2 * g.num_edges();
    }
    Problem pr(g);
    auto key = [](const SmallState &s) { return uint64_t{s.rows} | (uint64_t{s.covered} << 25); };
    std::unordered_map<uint64_t, size_t> dist;
    std::deque<SmallState> queue;
    SmallState start{pr.identity, 0};
    dist[key(start)] = 0;
    queue.push_back(start);
    while (!queue.empty()) {
        SmallState s = queue.front();
        queue.pop_front();
        size_t d = dist[key(s)];
        if (s.rows == pr.identity && s.covered == pr.all_edges) {
            return d;
        }
        if (d == limit) {
            continue;
        }
        for (const Gate &gate : pr.moves) {
            SmallState t = pr.apply(s, gate);
            if (dist.emplace(key(t), d + 1).second) {
                queue.push_back(t);
            }
        }
    }
    return std::nullopt;
}

std::vector<Graph> connected_graphs_up_to_iso(size_t max_n) {
    if (max_n > 5) {
        throw std::invalid_argument("graph enumeration supports at most 5 vertices");
    }
    std::vector<Graph> out;
    for (size_t n = 1; n <= max_n; ++n) {
        std::vector<Edge> pairs;
        for (Vertex a = 0; a < n; ++a) {
            for (Vertex b = a + 1; b < n; ++b) {
                pairs.push_back({a, b});
            }
        }
        std::vector<std::vector<Vertex>> perms;
        std::vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            perms.push_back(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));
        auto pair_bit = [&](Vertex a, Vertex b) {
            if (a > b) {
                std::swap(a, b);
            }
            // Index of (a, b) in `pairs`.
            return a * (2 * n - a - 1) / 2 + (b - a - 1);
        };

        std::vector<std::pair<std::pair<int, uint32_t>, Graph>> found;
        std::vector<bool> seen(size_t{1} << pairs.size(), false);
        for (uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
            if (seen[mask]) {
                continue;
            }
            uint32_t canon = mask;
            for (const auto &p : perms) {
                uint32_t image = 0;
                for (size_t e = 0; e < pairs.size(); ++e) {
                    if ((mask >> e) & 1) {
                        image |= 1u << pair_bit(p[pairs[e].u], p[pairs[e].v]);
                    }
                }
                seen[image] = true;
                canon = std::min(canon, image);
            }
            std::vector<Edge> edges;
            for (size_t e = 0; e < pairs.size(); ++e) {
                if ((canon >> e) & 1) {
                    edges.push_back(pairs[e]);
                }
            }
            Graph g = Graph::from_edges(n, edges);
            if (components(g).count == 1) {
                found.push_back({{std::popcount(canon), canon}, std::move(g)});
            }
        }
        std::sort(found.begin(), found.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
        for (auto &entry : found) {
            out.push_back(std::move(entry.second));
        }
    }
    return out;
}

ProbeReport conjecture_probe(size_t max_n, uint64_t oracle_budget) {
    ProbeReport report;
    for (Graph &g : connected_graphs_up_to_iso(max_n)) {
        ProbeRow row;
        row.n = g.num_vertices();
        row.m = g.num_edges();
        row.basic_lower = row.m + row.n - 1;
        row.chordal = lexbfs_peo(g).has_value();
        OracleResult oracle = oracle_min_size(g, 0, oracle_budget);
        if (oracle.status == OracleStatus::kOptimal) {
            row.min_size = oracle.min_size;
            row.perpane = oracle.min_size == row.basic_lower;
            row.shape = oracle.shape;
        }
        row.pcg = recognize(g).membership;
        if (row.perpane && row.pcg != Membership::kUnknown) {
            row.agree = *row.perpane == (row.pcg == Membership::kYes);
            if (!row.agree) {
                ++report.discrepancies;
            }
        } else {
            ++report.undecided;
        }
        row.graph = std::move(g);
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::string edge_signature(const Graph &g) {
    std::ostringstream out;
    bool first = true;
    for (const Edge &e : g.edges()) {
        out << (first ? "" : " ") << e.u + 1 << '-' << e.v + 1;
        first = false;
    }
    return out.str();
}

}  // namespace parityforge
