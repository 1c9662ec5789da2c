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

#ifndef PARITYFORGE_ORDERING_H
#define PARITYFORGE_ORDERING_H

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "parityforge/graph.h"

namespace parityforge {

/// Bijection between vertices and positions 0..n-1.
class Ordering {
   public:
    Ordering() = default;

    /// `sequence[p]` is the vertex at position p. Throws std::invalid_argument
    /// unless the sequence is a permutation of 0..n-1.
    static Ordering from_sequence(std::vector<Vertex> sequence);
    static Ordering identity(size_t n);

    size_t size() const {
        return sequence_.size();
    }
    size_t position(Vertex v) const {
        return position_[v];
    }
    Vertex at(size_t p) const {
        return sequence_[p];
    }
    const std::vector<Vertex> &sequence() const {
        return sequence_;
    }
    bool before(Vertex a, Vertex b) const {
        return position_[a] < position_[b];
    }
    Ordering reversed() const;

    bool operator==(const Ordering &other) const {
        return sequence_ == other.sequence_;
    }

   private:
    std::vector<Vertex> sequence_;
    std::vector<uint32_t> position_;
};

/// True iff members of `subset` that are consecutive under `order` are
/// pairwise adjacent. Sets of size <= 1 are trivially linked.
bool is_sigma_linked(const Graph &g, const Ordering &order, std::span<const Vertex> subset);

/// First failure found by check_pco: the later neighbours of `vertex` inside
/// `component` (a connected component of G - vertex) are not linked.
struct PcoViolation {
    Vertex vertex = 0;
    /// Sorted vertex set of the offending component of G - vertex.
    std::vector<Vertex> component;
};

struct PcoCheck {
    bool ok = false;
    std::optional<PcoViolation> violation;
    explicit operator bool() const {
        return ok;
    }
};

/// Perfect cancellation ordering check: for every vertex v and every
/// component C of G - v, the later neighbours of v in C are linked.
///
/// Components of G - v that touch N(v) correspond one-to-one with the blocks
/// through v, so the check runs block by block in O(n + m) and only walks
/// G - v to report the witness when it fails.
PcoCheck check_pco(const Graph &g, const Ordering &order);

inline bool is_pco(const Graph &g, const Ordering &order) {
    return check_pco(g, order).ok;
}

/// Perfect elimination ordering: every vertex's later neighbours form a clique.
bool is_peo(const Graph &g, const Ordering &order);

/// Lexicographic BFS (ties broken by lowest label); returns the reversed
/// visit order when it is a perfect elimination ordering, i.e. when g is
/// chordal, and nullopt otherwise.
std::optional<Ordering> lexbfs_peo(const Graph &g);

/// One line of n 1-based labels in position order.
Ordering parse_ordering(std::string_view text, size_t n);
std::string format_ordering(const Ordering &order);

}  // namespace parityforge

#endif  // PARITYFORGE_ORDERING_H
