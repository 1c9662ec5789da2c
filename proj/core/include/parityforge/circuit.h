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

#ifndef PARITYFORGE_CIRCUIT_H
#define PARITYFORGE_CIRCUIT_H

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "parityforge/graph.h"

namespace parityforge {

/// CNOT(control, target): wire `target` becomes target XOR control.
struct Gate {
    Vertex control = 0;
    Vertex target = 0;
    auto operator<=>(const Gate &) const = default;
};

/// Ordered CNOT list over `num_wires` wires. Gates are bounds-checked on
/// insertion, so a Circuit is always well formed.
class Circuit {
   public:
    Circuit() = default;
    explicit Circuit(size_t num_wires);
    Circuit(size_t num_wires, std::vector<Gate> gates);

    void append(Vertex control, Vertex target);
    void append(const Circuit &other);

    size_t num_wires() const {
        return num_wires_;
    }
    size_t size() const {
        return gates_.size();
    }
    bool empty() const {
        return gates_.empty();
    }
    const std::vector<Gate> &gates() const {
        return gates_;
    }
    const Gate &operator[](size_t k) const {
        return gates_[k];
    }
    bool operator==(const Circuit &) const = default;

   private:
    size_t num_wires_ = 0;
    std::vector<Gate> gates_;
};

/// Parity support set: the inputs whose XOR a wire currently carries.
class Term {
   public:
    Term() = default;
    explicit Term(size_t num_wires) : words_((num_wires + 63) / 64, 0) {
    }
    static Term singleton(size_t num_wires, Vertex i) {
        Term t(num_wires);
        t.flip(i);
        return t;
    }

    void flip(Vertex i) {
        words_[i >> 6] ^= uint64_t{1} << (i & 63);
    }
    bool contains(Vertex i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }
    Term &operator^=(const Term &other) {
        for (size_t w = 0; w < words_.size(); ++w) {
            words_[w] ^= other.words_[w];
        }
        return *this;
    }
    size_t count() const;
    bool empty() const;
    /// Members in increasing order.
    std::vector<Vertex> members() const;
    /// Writes the two members of a binary term; false otherwise.
    bool binary_members(Vertex &a, Vertex &b) const;
    bool is_singleton_of(Vertex i) const;

    bool operator==(const Term &) const = default;

    /// "{1,2}" with 1-based labels.
    std::string to_string() const;

   private:
    std::vector<uint64_t> words_;
};

/// Resulting term of one gate.
struct TraceEntry {
    Vertex wire = 0;
    Term term;
    bool operator==(const TraceEntry &) const = default;
};

/// Annotated circuit: initial singletons, the term produced by every gate
/// (entry k is the target wire's state after gate k), and the final state.
struct TermTrace {
    std::vector<Term> initial;
    std::vector<TraceEntry> steps;
    std::vector<Term> final_state;
};

/// Streams (gate index, target wire, resulting term) without storing the trace.
void simulate_each(const Circuit &c, const std::function<void(size_t, Vertex, const Term &)> &visit);

TermTrace simulate(const Circuit &c);

/// Per wire, the sequence of terms it holds: its initial singleton followed
/// by the result of every gate targeting it.
std::vector<std::vector<Term>> wire_histories(const TermTrace &trace);

struct VerificationReport {
    bool is_parity_network = false;
    std::vector<Edge> covered_edges;
    std::vector<Edge> missing_edges;
    bool final_is_identity = false;
    /// Only meaningful with VerifyOptions::allow_permutation.
    bool final_is_permutation = false;
    size_t size = 0;
    /// Gates whose resulting term has cardinality other than two.
    size_t nonbinary_outcome_count = 0;
};

struct VerifyOptions {
    /// Accept any final state in which every wire holds a distinct singleton.
    bool allow_permutation = false;
};

/// Checks the graphic-parity-network conditions. An edge counts as covered
/// when its binary term is the result of some gate. Throws
/// std::invalid_argument when the wire count differs from the vertex count.
VerificationReport verify(const Circuit &c, const Graph &g, VerifyOptions options = {});

/// Same gates, reversed order.
Circuit inverse(const Circuit &c);

/// Reads "n g" then g lines "CNOT c t" (1-based, '#' comments).
Circuit parse_circuit(std::string_view text);
std::string format_circuit(const Circuit &c);

}  // namespace parityforge

#endif  // PARITYFORGE_CIRCUIT_H
