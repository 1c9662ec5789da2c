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

#ifndef PARITYFORGE_SYNTHESIS_H
#define PARITYFORGE_SYNTHESIS_H

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "parityforge/circuit.h"
#include "parityforge/graph.h"
#include "parityforge/ordering.h"

namespace parityforge {

enum class Method { kTrivial, kPco, kRandom };

std::string_view method_name(Method method);
/// Accepts "trivial", "pco", "random"; throws std::invalid_argument otherwise.
Method parse_method(std::string_view name);

/// Gate accounting for the randomized synthesizer.
struct RandomSynthesisStats {
    /// Resets of a wire that entered its turn holding a binary term.
    size_t resets = 0;
    /// Grouped-cancellation rounds; each costs an opening and a closing
    /// CNOT(j, i) on the current wire.
    size_t grouped_activations = 0;
    /// Gates that produced an edge term; always m.
    size_t edge_gates = 0;
};

struct SynthesisResult {
    Circuit circuit;
    size_t size = 0;
    Method method = Method::kTrivial;
    /// Random only.
    std::optional<uint64_t> seed;
    /// Random only: the processing order pi (position = turn).
    std::optional<Ordering> permutation;
    /// Pco only.
    std::optional<Ordering> ordering;
    std::optional<RandomSynthesisStats> random_stats;
};

/// Raised by synth_pco when the supplied ordering is not a perfect
/// cancellation ordering.
class NotPcoError : public std::invalid_argument {
   public:
    explicit NotPcoError(PcoViolation violation);
    const PcoViolation &violation() const {
        return violation_;
    }

   private:
    PcoViolation violation_;
};

/// Generate-and-clean every edge: CNOT(u,v) twice per edge {u<v} in sorted
/// order. Size exactly 2m.
SynthesisResult synth_trivial(const Graph &g);

/// Perfect network of size m + n - c from a perfect cancellation ordering.
///
/// The graph is split into blocks; each block is synthesized with the
/// ordering restricted to it and the block circuits are concatenated (each
/// one restores every wire before the next starts). Throws NotPcoError if
/// `order` fails check_pco.
SynthesisResult synth_pco(const Graph &g, const Ordering &order);

/// Randomized synthesis: a seeded uniform permutation drives
/// synth_random_with_permutation.
SynthesisResult synth_random(const Graph &g, uint64_t seed);

/// The randomized synthesizer with an explicit processing order: vertex
/// `permutation.at(0)` is handled first. Every term it creates has at most
/// two elements, and input i never leaves wire i.
SynthesisResult synth_random_with_permutation(const Graph &g, const Ordering &permutation);

/// Uniform permutation of 0..n-1 drawn from CounterRng(seed).
Ordering random_permutation(size_t n, uint64_t seed);

}  // namespace parityforge

#endif  // PARITYFORGE_SYNTHESIS_H
