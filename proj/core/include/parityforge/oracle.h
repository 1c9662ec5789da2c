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


#ifndef PARITYFORGE_ORACLE_H
#define PARITYFORGE_ORACLE_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "parityforge/circuit.h"
#include "parityforge/graph.h"
#include "parityforge/recognition.h"

namespace parityforge {

struct BoundReport {
    /// m + n - c.
    size_t basic_lower = 0;
    /// Present when m > 0 and the girth is at least 5 (forests included):
    /// size > m + m/6, i.e. size >= m + floor(m/6) + 1.
    std::optional<size_t> girth5_lower;
    /// The same bound as the exact rational 7m/6 (numerator over 6).
    std::optional<size_t> girth5_sixths;
    /// 2m.
    size_t trivial_upper = 0;
    std::optional<size_t> girth;
};

BoundReport bounds(const Graph &g);

/// Properties of a witness circuit, recorded as data.
struct WitnessShape {
    /// Every resulting term has at most two elements.
    bool terms_at_most_binary = false;
    /// Some wire is never the control of any gate.
    bool has_unused_control_wire = false;
    /// Every wire's term always contains its own index.
    bool inputs_stay_on_wire = false;
};

WitnessShape witness_shape(const Circuit &c);

enum class OracleStatus { kOptimal, kBudgetExhausted, kNoneWithinLimit };

struct OracleResult {
    OracleStatus status = OracleStatus::kBudgetExhausted;
    size_t min_size = 0;
    Circuit witness;
    uint64_t explored = 0;
    WitnessShape shape;
};

inline constexpr size_t kOracleMaxVertices = 5;
inline constexpr uint64_t kDefaultOracleBudget = 200'000'000;

/// Exact minimum network size by iterative-deepening A*.
///
/// The state is the F2 wire matrix plus the set of covered edges. The
/// heuristic adds the number of uncovered edges (each needs its own gate)
/// to the number of wires not holding their own singleton (each needs a
/// later gate whose result is a singleton, which covers nothing), so it is
/// admissible. Depth is capped by `limit` (0 means 2m). Throws
/// std::invalid_argument for n > kOracleMaxVertices.
OracleResult oracle_min_size(const Graph &g, size_t limit = 0, uint64_t budget = kDefaultOracleBudget);

/// Plain breadth-first search over the same state space, with no
/// heuristic and no move pruning. Exponentially slower; for cross-checks.
std::optional<size_t> oracle_min_size_bfs(const Graph &g, size_t limit = 0);

/// Connected graphs with 1..max_n vertices, one per isomorphism class,
/// ordered by (n, m, canonical form). max_n <= 6.
std::vector<Graph> connected_graphs_up_to_iso(size_t max_n);

struct ProbeRow {
    Graph graph;
    size_t n = 0;
    size_t m = 0;
    size_t basic_lower = 0;
    std::optional<size_t> min_size;
    bool chordal = false;
    /// min_size == basic_lower.
    std::optional<bool> perpane;
    Membership pcg = Membership::kUnknown;
    bool agree = false;
    WitnessShape shape;
};

struct ProbeReport {
    std::vector<ProbeRow> rows;
    size_t discrepancies = 0;
    size_t undecided = 0;
};

/// For every connected graph up to max_n vertices compares "has a network
/// of size m + n - 1" (oracle) with perfect-cancellation membership
/// (recognizer). max_n <= 5.
ProbeReport conjecture_probe(size_t max_n, uint64_t oracle_budget = kDefaultOracleBudget);

/// Edge list as "1-2 1-3 3-4", 1-based.
std::string edge_signature(const Graph &g);

}  // namespace parityforge

#endif  // PARITYFORGE_ORACLE_H
