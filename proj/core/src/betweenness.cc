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


#include "parityforge/betweenness.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "parityforge/rng.h"
#include "parityforge/synthesis.h"
#include "text_util.h"

namespace parityforge {

void BetweennessInstance::validate() const {
    for (size_t i = 0; i < triples.size(); ++i) {
        const auto &t = triples[i];
        for (Vertex x : t) {
            if (x >= p) {
                throw std::invalid_argument("triple " + std::to_string(i + 1) + " has entry out of range");
            }
        }
        if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) {
            throw std::invalid_argument("triple " + std::to_string(i + 1) + " repeats an element");
        }
    }
}

BetweennessInstance parse_betweenness(std::string_view text) {
    auto lines = internal::tokenize_lines(text);
    if (lines.empty()) {
        throw ParseError(0, "empty betweenness file");
    }
    const auto &head = lines.front();
    if (head.tokens.size() != 2) {
        throw ParseError(head.number, "expected header 'p q'");
    }
    BetweennessInstance inst;
    inst.p = internal::parse_count(head.tokens[0], head.number, "p");
    size_t q = internal::parse_count(head.tokens[1], head.number, "q");
    for (size_t k = 1; k < lines.size(); ++k) {
        const auto &line = lines[k];
        if (line.tokens.size() != 3) {
            throw ParseError(line.number, "expected 'x y z'");
        }
        std::array<Vertex, 3> t{};
        for (size_t j = 0; j < 3; ++j) {
            t[j] = internal::parse_label(line.tokens[j], inst.p, line.number, "element");
        }
        if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) {
            throw ParseError(line.number, "triple repeats an element");
        }
        inst.triples.push_back(t);
    }
    if (inst.triples.size() != q) {
        throw ParseError(head.number, "header announces " + std::to_string(q) + " triples, found " +
                                          std::to_string(inst.triples.size()));
    }
    return inst;
}

std::string format_betweenness(const BetweennessInstance &inst) {
    std::ostringstream out;
    out << inst.p << ' ' << inst.q() << '\n';
    for (const auto &t : inst.triples) {
        out << t[0] + 1 << ' ' << t[1] + 1 << ' ' << t[2] + 1 << '\n';
    }
    return out.str();
}

bool satisfies(const BetweennessInstance &inst, const Ordering &order) {
    if (order.size() != inst.p) {
        return false;
    }
    for (const auto &t : inst.triples) {
        bool forward = order.before(t[0], t[1]) && order.before(t[1], t[2]);
        bool backward = order.before(t[2], t[1]) && order.before(t[1], t[0]);
        if (!forward && !backward) {
            return false;
        }
    }
    return true;
}

std::string ReductionLabels::name(Vertex v) const {
    if (v < p) {
        return "x" + std::to_string(v + 1);
    }
    if (v < p + 2 * q) {
        size_t i = (v - p) / 2;
        return "c" + std::to_string(i + 1) + "." + std::to_string((v - p) % 2 == 0 ? 1 : 3);
    }
    if (v < 2 * p + 2 * q) {
        return "u" + std::to_string(v - p - 2 * q + 1);
    }
    size_t off = v - 2 * p - 2 * q;
    return "z" + std::to_string(off / 12 + 1) + "." + std::to_string(off % 12 + 1);
}

size_t reduced_edge_count(size_t p, size_t q) {
    size_t c = 2 * q;
    size_t within_c = c * (c - (c > 0 ? 1 : 0)) / 2 - q;
    size_t ground_c = p * c;
    size_t within_u = p * (p - (p > 0 ? 1 : 0)) / 2;
    size_t u_rest = p * (p + c);
    return within_c + ground_c + within_u + u_rest + 36 * q;
}

BetweennessReduction reduce_betweenness(const BetweennessInstance &inst) {
    inst.validate();
    ReductionLabels lab{inst.p, inst.q()};
    size_t p = inst.p;
    size_t q = inst.q();
    std::vector<Vertex> c_vertices;
    for (size_t i = 0; i < q; ++i) {
        c_vertices.push_back(lab.c_first(i));
        c_vertices.push_back(lab.c_second(i));
    }
    std::vector<Edge> edges;
    for (size_t a = 0; a < c_vertices.size(); ++a) {
        for (size_t b = a + 1; b < c_vertices.size(); ++b) {
            if (a / 2 != b / 2) {
                edges.push_back(Edge::make(c_vertices[a], c_vertices[b]));
            }
        }
    }
    for (size_t s = 0; s < p; ++s) {
        for (Vertex c : c_vertices) {
            edges.push_back(Edge::make(lab.ground(s), c));
        }
    }
    for (size_t k = 0; k < p; ++k) {
        Vertex u = lab.universal(k);
        for (size_t k2 = k + 1; k2 < p; ++k2) {
            edges.push_back(Edge::make(u, lab.universal(k2)));
        }
        for (size_t s = 0; s < p; ++s) {
            edges.push_back(Edge::make(u, lab.ground(s)));
        }
        for (Vertex c : c_vertices) {
            edges.push_back(Edge::make(u, c));
        }
    }
    for (size_t i = 0; i < q; ++i) {
        const auto &t = inst.triples[i];
        std::array<Vertex, 5> chain{t[0], lab.c_first(i), t[1], lab.c_second(i), t[2]};
        for (size_t tw = 0; tw < 12; ++tw) {
            size_t group = tw / 4;
            for (size_t j = group; j < group + 3; ++j) {
                edges.push_back(Edge::make(lab.gadget(i, tw), chain[j]));
            }
        }
    }
    return {Graph::from_edges(lab.num_vertices(), edges), lab};
}

Ordering pco_from_betweenness_solution(const BetweennessInstance &inst, const Ordering &order) {
    inst.validate();
    if (order.size() != inst.p) {
        throw std::invalid_argument("solution order has wrong size");
    }
    if (!satisfies(inst, order)) {
        throw std::invalid_argument("order violates a betweenness triple");
    }
    ReductionLabels lab{inst.p, inst.q()};
    size_t p = inst.p;
    // after[k]: chain vertices placed right after the k-th ground element (0-based).
    std::vector<std::vector<Vertex>> after(p);
    for (size_t i = 0; i < inst.q(); ++i) {
        const auto &t = inst.triples[i];
        Vertex early = lab.c_first(i);
        Vertex late = lab.c_second(i);
        if (order.before(t[2], t[0])) {
            std::swap(early, late);
        }
        size_t mid = order.position(t[1]);
        after[mid - 1].push_back(early);
        after[mid].push_back(late);
    }
    std::vector<Vertex> seq;
    seq.reserve(lab.num_vertices());
    for (size_t i = 0; i < inst.q(); ++i) {
        for (size_t tw = 0; tw < 12; ++tw) {
            seq.push_back(lab.gadget(i, tw));
        }
    }
    for (size_t k = 0; k < p; ++k) {
        seq.push_back(lab.universal(k));
        seq.push_back(order.at(k));
        seq.insert(seq.end(), after[k].begin(), after[k].end());
    }
    return Ordering::from_sequence(std::move(seq));
}

namespace {

class BetweennessSearch {
   public:
    explicit BetweennessSearch(const BetweennessInstance &inst)
        : inst_(inst), pos_(inst.p, kUnplaced), by_element_(inst.p) {
        for (size_t i = 0; i < inst.triples.size(); ++i) {
            for (Vertex x : inst.triples[i]) {
                by_element_[x].push_back(i);
            }
        }
    }

    bool extend() {
        if (seq_.size() == inst_.p) {
            return true;
        }
        for (Vertex e = 0; e < inst_.p; ++e) {
            if (pos_[e] != kUnplaced) {
                continue;
            }
            pos_[e] = seq_.size();
            seq_.push_back(e);
            if (consistent(e) && extend()) {
                return true;
            }
            seq_.pop_back();
            pos_[e] = kUnplaced;
        }
        return false;
    }

    const std::vector<Vertex> &sequence() const {
        return seq_;
    }

   private:
    static constexpr size_t kUnplaced = static_cast<size_t>(-1);

    bool consistent(Vertex e) const {
        for (size_t i : by_element_[e]) {
            size_t px = pos_[inst_.triples[i][0]];
            size_t py = pos_[inst_.triples[i][1]];
            size_t pz = pos_[inst_.triples[i][2]];
            bool hx = px != kUnplaced;
            bool hy = py != kUnplaced;
            bool hz = pz != kUnplaced;
            if (hx && hz && !hy) {
                return false;
            }
            if (hy && hx != hz) {
                // The missing endpoint comes last, so the placed one must precede y.
                size_t other = hx ? px : pz;
                if (py < other) {
                    return false;
                }
            }
            if (hx && hy && hz && !((px < py && py < pz) || (pz < py && py < px))) {
                return false;
            }
        }
        return true;
    }

    const BetweennessInstance &inst_;
    std::vector<size_t> pos_;
    std::vector<std::vector<size_t>> by_element_;
    std::vector<Vertex> seq_;
};

}  // namespace

std::optional<Ordering> solve_betweenness_brute(const BetweennessInstance &inst) {
    inst.validate();
    if (inst.p > kMaxBruteBetweenness) {
        throw std::invalid_argument("brute betweenness search supports p <= " +
                                    std::to_string(kMaxBruteBetweenness));
    }
    BetweennessSearch search(inst);
    if (!search.extend()) {
        return std::nullopt;
    }
    return Ordering::from_sequence(search.sequence());
}

BetweennessInstance random_satisfiable_betweenness(size_t p, size_t q, uint64_t seed, Ordering *planted) {
    if (p < 3 && q > 0) {
        throw std::invalid_argument("triples need p >= 3");
    }
    Ordering pi = random_permutation(p, seed);
    CounterRng rng = CounterRng(seed).split(1);
    BetweennessInstance inst;
    inst.p = p;
    for (size_t i = 0; i < q; ++i) {
        std::array<size_t, 3> at{};
        at[0] = rng.below(p);
        do {
            at[1] = rng.below(p);
        } while (at[1] == at[0]);
        do {
            at[2] = rng.below(p);
        } while (at[2] == at[0] || at[2] == at[1]);
        std::sort(at.begin(), at.end());
        std::array<Vertex, 3> t{pi.at(at[0]), pi.at(at[1]), pi.at(at[2])};
        if (rng.below(2) == 1) {
            std::swap(t[0], t[2]);
        }
        inst.triples.push_back(t);
    }
    if (planted != nullptr) {
        *planted = pi;
    }
    return inst;
}

RecognitionResult recognize_reduction(const BetweennessInstance &inst, uint64_t budget) {
    BetweennessReduction red = reduce_betweenness(inst);
    if (inst.p <= kMaxBruteBetweenness) {
        if (auto solution = solve_betweenness_brute(inst)) {
            Ordering sigma = pco_from_betweenness_solution(inst, *solution);
            if (!is_pco(red.graph, sigma)) {
                throw std::logic_error("constructed ordering for a solved instance fails the PCO check");
            }
            RecognitionResult r;
            r.membership = Membership::kYes;
            r.witness = std::move(sigma);
            r.method = RecognitionMethod::kConstructed;
            return r;
        }
    }
    return recognize_brute(red.graph, budget);
}

}  // namespace parityforge
