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


#ifndef PARITYFORGE_RECOGNITION_H
#define PARITYFORGE_RECOGNITION_H

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "parityforge/graph.h"
#include "parityforge/ordering.h"

namespace parityforge {

enum class Membership { kYes, kNo, kUnknown };

enum class RecognitionMethod { kChordal, kUniversal, kBrute, kConstructed };

std::string_view membership_name(Membership m);
std::string_view recognition_method_name(RecognitionMethod m);

struct RecognitionResult {
    Membership membership = Membership::kUnknown;
    /// Present iff membership is kYes; always passes is_pco.
    std::optional<Ordering> witness;
    RecognitionMethod method = RecognitionMethod::kBrute;
    /// Search nodes (vertex placements) spent by the backtracking stage.
    uint64_t explored = 0;
};

inline constexpr uint64_t kDefaultRecognitionBudget = 20'000'000;

/// Perfect cancellation graph membership.
///
/// Chordal graphs are accepted through their Lex-BFS elimination ordering,
/// graphs with at least floor(n/2) universal vertices through
/// pco_from_universal, and everything else goes to an exact backtracking
/// search over orderings. The search places vertices left to right and
/// rejects a placement as soon as some earlier vertex would have two
/// consecutive later neighbours (inside one component of G - v) that are
/// not adjacent. Connected components are searched independently. When more
/// than `budget` placements are needed the answer is kUnknown.
RecognitionResult recognize(const Graph &g, uint64_t budget = kDefaultRecognitionBudget);

/// Exhaustive search only (no fast paths); used to cross-check.
RecognitionResult recognize_brute(const Graph &g, uint64_t budget = kDefaultRecognitionBudget);

/// Vertices adjacent to every other vertex, sorted.
std::vector<Vertex> universal_vertices(const Graph &g);

/// Alternates the non-universal vertices with `universal_set`:
/// x1, u1, x2, u2, ..., leftovers last. Throws std::invalid_argument if a
/// listed vertex is not universal or the set has fewer than floor(n/2)
/// members.
Ordering pco_from_universal(const Graph &g, const std::vector<Vertex> &universal_set);

}  // namespace parityforge

#endif  // PARITYFORGE_RECOGNITION_H
