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


#ifndef PARITYFORGE_GENERATORS_H
#define PARITYFORGE_GENERATORS_H

#include <array>
#include <cstdint>
#include <vector>

#include "parityforge/graph.h"
#include "parityforge/ordering.h"

namespace parityforge {

bool is_prime(uint64_t k);

/// Projective plane of prime order k over the integers mod k. Points and
/// lines are homogeneous triples normalized so the first nonzero coordinate
/// is 1; point P lies on line L iff their dot product vanishes.
struct ProjectivePlane {
    size_t order = 0;
    std::vector<std::array<uint32_t, 3>> coords;
    /// lines[l]: sorted indices of the points on line l (line l has
    /// coordinates coords[l]).
    std::vector<std::vector<uint32_t>> lines;

    size_t size() const {
        return coords.size();
    }
};

/// Builds the plane and checks the incidence axioms: every line has k+1
/// points, every point lies on k+1 lines, two points share exactly one
/// line, two lines share exactly one point. Throws std::invalid_argument if
/// k is not prime and std::logic_error if an axiom fails.
ProjectivePlane make_projective_plane(size_t k);

/// Throws std::logic_error naming the first axiom that fails.
void check_projective_axioms(const ProjectivePlane &plane);

/// Point-line incidence graph: points are vertices 0..N-1, lines N..2N-1.
Graph projective_incidence_graph(const ProjectivePlane &plane);

/// Largest prime p with p^2 + p + 1 <= t, or 0 when there is none.
size_t largest_plane_prime(size_t t);

inline constexpr size_t kMinProjectiveTarget = 42;

/// Incidence graph of the plane of order largest_plane_prime(n_target / 2),
/// padded with isolated vertices to exactly n_target vertices. Girth 6.
Graph gen_projective_graph(size_t n_target);

/// K_{2,p}: vertices 0 and 1 on one side, 2..p+1 on the other.
Graph gen_k2p(size_t p);
Graph gen_cycle(size_t n);
Graph gen_complete(size_t n);
Graph gen_path(size_t n);
/// Uniform random recursive tree: vertex i > 0 attaches to a random earlier one.
Graph gen_random_tree(size_t n, uint64_t seed);
/// Erdos-Renyi G(n, p).
Graph gen_gnp(size_t n, double p, uint64_t seed);

struct ChordalSample {
    Graph graph;
    Ordering peo;
};

/// Random chordal graph by reverse elimination: each new vertex picks a
/// uniformly random maximal clique of the graph so far and joins each of its
/// members independently with probability `density`. Labels are shuffled
/// afterwards; `peo` is the reversed insertion order and is a perfect
/// elimination ordering. density 1 yields K_n.
ChordalSample gen_random_chordal(size_t n, double density, uint64_t seed);

}  // namespace parityforge

#endif  // PARITYFORGE_GENERATORS_H
