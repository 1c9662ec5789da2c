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


#ifndef PARITYFORGE_BETWEENNESS_H
#define PARITYFORGE_BETWEENNESS_H

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "parityforge/graph.h"
#include "parityforge/ordering.h"
#include "parityforge/recognition.h"

namespace parityforge {

/// Ground set {0..p-1} and triples (x, y, z): y must lie between x and z.
struct BetweennessInstance {
    size_t p = 0;
    std::vector<std::array<Vertex, 3>> triples;

    size_t q() const {
        return triples.size();
    }
    /// Throws std::invalid_argument on out-of-range or repeated entries.
    void validate() const;
};

/// "p q" then q lines "x y z", 1-based.
BetweennessInstance parse_betweenness(std::string_view text);
std::string format_betweenness(const BetweennessInstance &inst);

/// True iff every triple appears in `order` as x<y<z or z<y<x.
bool satisfies(const BetweennessInstance &inst, const Ordering &order);

/// Vertex numbering of the reduced graph (0-based):
///   ground element s          -> s
///   triple i, first C vertex  -> p + 2i
///   triple i, second C vertex -> p + 2i + 1
///   universal vertex k        -> p + 2q + k
///   gadget vertex t of triple i (t < 12, group t / 4) -> 2p + 2q + 12i + t
struct ReductionLabels {
    size_t p = 0;
    size_t q = 0;

    Vertex ground(size_t s) const {
        return static_cast<Vertex>(s);
    }
    Vertex c_first(size_t i) const {
        return static_cast<Vertex>(p + 2 * i);
    }
    Vertex c_second(size_t i) const {
        return static_cast<Vertex>(p + 2 * i + 1);
    }
    Vertex universal(size_t k) const {
        return static_cast<Vertex>(p + 2 * q + k);
    }
    Vertex gadget(size_t i, size_t t) const {
        return static_cast<Vertex>(2 * p + 2 * q + 12 * i + t);
    }
    size_t num_vertices() const {
        return 2 * p + 14 * q;
    }
    /// Human-readable name such as "x3", "c1.2", "u2" or "z1.7" (1-based).
    std::string name(Vertex v) const;
};

struct BetweennessReduction {
    Graph graph;
    ReductionLabels labels;
};

/// The hardness construction. Triple i = (x, y, z) gets a chain
/// x, a_i, y, b_i, z with a_i = c_first(i), b_i = c_second(i); its twelve
/// gadget vertices form three groups of four false twins attached to
/// consecutive windows {x, a_i, y}, {a_i, y, b_i}, {y, b_i, z}. The C
/// vertices are pairwise adjacent except a_i, b_i; every ground element is
/// adjacent to every C vertex; the p universal vertices are adjacent to all
/// of ground, C and each other.
BetweennessReduction reduce_betweenness(const BetweennessInstance &inst);

/// Closed form for the edge count of the reduced graph.
size_t reduced_edge_count(size_t p, size_t q);

/// Explicit ordering of the reduced graph from a solution `order` of the
/// instance: all gadget vertices, then u1, x1, ..., up, xp where x_k is the
/// k-th ground element of `order`, with each triple's chain vertices slotted
/// just before and just after the universal vertex adjacent to its middle
/// element. Throws std::invalid_argument if `order` violates a triple.
Ordering pco_from_betweenness_solution(const BetweennessInstance &inst, const Ordering &order);

inline constexpr size_t kMaxBruteBetweenness = 10;

/// Backtracking search; throws std::invalid_argument when p exceeds
/// kMaxBruteBetweenness.
std::optional<Ordering> solve_betweenness_brute(const BetweennessInstance &inst);

/// q triples drawn to agree with a uniformly random planted order of size p
/// (p >= 3). The planted order is written to `planted` when non-null.
BetweennessInstance random_satisfiable_betweenness(size_t p, size_t q, uint64_t seed, Ordering *planted = nullptr);

/// Recognition of a reduced graph: when the instance is solvable the
/// constructed ordering is returned (method kConstructed); otherwise the
/// budgeted brute search runs and may answer kUnknown.
RecognitionResult recognize_reduction(const BetweennessInstance &inst, uint64_t budget = kDefaultRecognitionBudget);

}  // namespace parityforge

#endif  // PARITYFORGE_BETWEENNESS_H
