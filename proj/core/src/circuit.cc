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

#include "parityforge/circuit.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace parityforge {

Circuit::Circuit(size_t num_wires) : num_wires_(num_wires) {
    if (num_wires > kMaxVertices) {
        throw std::invalid_argument(
            "circuit has " + std::to_string(num_wires) + " wires; at most " + std::to_string(kMaxVertices) +
            " supported");
    }
}

Circuit::Circuit(size_t num_wires, std::vector<Gate> gates) : Circuit(num_wires) {
    gates_.reserve(gates.size());
    for (const Gate &gate : gates) {
        append(gate.control, gate.target);
    }
}

void Circuit::append(Vertex control, Vertex target) {
    if (control >= num_wires_ || target >= num_wires_) {
        throw std::invalid_argument("gate wire out of range");
    }
    if (control == target) {
        throw std::invalid_argument("CNOT control equals target (wire " + std::to_string(control + 1) + ")");
    }
    gates_.push_back({control, target});
}

void Circuit::append(const Circuit &other) {
    if (other.num_wires_ != num_wires_) {
        throw std::invalid_argument("cannot concatenate circuits of different widths");
    }
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
}

size_t Term::count() const {
    size_t total = 0;
    for (uint64_t w : words_) {
        total += static_cast<size_t>(std::popcount(w));
    }
    return total;
}

bool Term::empty() const {
    return std::all_of(words_.begin(), words_.end(), [](uint64_t w) { return w == 0; });
}

std::vector<Vertex> Term::members() const {
    std::vector<Vertex> out;
    for (size_t w = 0; w < words_.size(); ++w) {
        uint64_t bits = words_[w];
        while (bits) {
            int b = std::countr_zero(bits);
            bits &= bits - 1;
            out.push_back(static_cast<Vertex>(w * 64 + static_cast<size_t>(b)));
        }
    }
    return out;
}

bool Term::binary_members(Vertex &a, Vertex &b) const {
    size_t found = 0;
    Vertex got[2] = {0, 0};
    for (size_t w = 0; w < words_.size(); ++w) {
        uint64_t bits = words_[w];
        while (bits) {
            if (found == 2) {
                return false;
            }
            got[found++] = static_cast<Vertex>(w * 64 + static_cast<size_t>(std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
    if (found != 2) {
        return false;
    }
    a = got[0];
    b = got[1];
    return true;
}

bool Term::is_singleton_of(Vertex i) const {
    for (size_t w = 0; w < words_.size(); ++w) {
        uint64_t expect = (w == (i >> 6)) ? (uint64_t{1} << (i & 63)) : 0;
        if (words_[w] != expect) {
            return false;
        }
    }
    return true;
}

std::string Term::to_string() const {
    std::string out = "{";
    bool first = true;
    for (Vertex v : members()) {
        if (!first) {
            out += ',';
        }
        out += std::to_string(v + 1);
        first = false;
    }
    out += '}';
    return out;
}

void simulate_each(const Circuit &c, const std::function<void(size_t, Vertex, const Term &)> &visit) {
    size_t n = c.num_wires();
    std::vector<Term> state;
    state.reserve(n);
    for (Vertex i = 0; i < n; ++i) {
        state.push_back(Term::singleton(n, i));
    }
    for (size_t k = 0; k < c.size(); ++k) {
        const Gate &gate = c[k];
        state[gate.target] ^= state[gate.control];
        visit(k, gate.target, state[gate.target]);
    }
}

TermTrace simulate(const Circuit &c) {
    size_t n = c.num_wires();
    TermTrace trace;
    trace.initial.reserve(n);
    for (Vertex i = 0; i < n; ++i) {
        trace.initial.push_back(Term::singleton(n, i));
    }
    trace.final_state = trace.initial;
    trace.steps.reserve(c.size());
    simulate_each(c, [&](size_t, Vertex wire, const Term &term) {
        trace.steps.push_back({wire, term});
        trace.final_state[wire] = term;
    });
    return trace;
}

std::vector<std::vector<Term>> wire_histories(const TermTrace &trace) {
    std::vector<std::vector<Term>> out(trace.initial.size());
    for (size_t i = 0; i < trace.initial.size(); ++i) {
        out[i].push_back(trace.initial[i]);
    }
    for (const TraceEntry &step : trace.steps) {
        out[step.wire].push_back(step.term);
    }
    return out;
}

VerificationReport verify(const Circuit &c, const Graph &g, VerifyOptions options) {
    size_t n = g.num_vertices();
    if (c.num_wires() != n) {
        throw std::invalid_argument(
            "circuit has " + std::to_string(c.num_wires()) + " wires but graph has " + std::to_string(n) + " vertices");
    }
    VerificationReport report;
    report.size = c.size();
    std::vector<bool> covered(g.num_edges(), false);
    std::vector<Term> final_state;
    final_state.reserve(n);
    for (Vertex i = 0; i < n; ++i) {
        final_state.push_back(Term::singleton(n, i));
    }
    simulate_each(c, [&](size_t, Vertex wire, const Term &term) {
        Vertex a = 0;
        Vertex b = 0;
        if (term.binary_members(a, b)) {
            size_t idx = g.edge_index(a, b);
            if (idx < covered.size()) {
                covered[idx] = true;
            }
        } else {
            ++report.nonbinary_outcome_count;
        }
        final_state[wire] = term;
    });
    for (size_t e = 0; e < covered.size(); ++e) {
        (covered[e] ? report.covered_edges : report.missing_edges).push_back(g.edges()[e]);
    }
    report.final_is_identity = true;
    for (Vertex i = 0; i < n; ++i) {
        if (!final_state[i].is_singleton_of(i)) {
            report.final_is_identity = false;
            break;
        }
    }
    bool final_ok = report.final_is_identity;
    if (options.allow_permutation) {
        std::vector<bool> used(n, false);
        bool perm = true;
        for (Vertex i = 0; i < n && perm; ++i) {
            auto members = final_state[i].members();
            if (members.size() != 1 || used[members[0]]) {
                perm = false;
            } else {
                used[members[0]] = true;
            }
        }
        report.final_is_permutation = perm;
        final_ok = perm;
    }
    report.is_parity_network = report.missing_edges.empty() && final_ok;
    return report;
}

Circuit inverse(const Circuit &c) {
    std::vector<Gate> gates(c.gates().rbegin(), c.gates().rend());
    return Circuit(c.num_wires(), std::move(gates));
}

}  // namespace parityforge
