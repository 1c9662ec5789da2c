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


#include "parityforge/generators.h"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "parityforge/rng.h"
#include "parityforge/synthesis.h"

namespace parityforge {

bool is_prime(uint64_t k) {
    if (k < 2) {
        return false;
    }
    for (uint64_t d = 2; d * d <= k; ++d) {
        if (k % d == 0) {
            return false;
        }
    }
    return true;
}

ProjectivePlane make_projective_plane(size_t k) {
    if (!is_prime(k)) {
        throw std::invalid_argument("projective plane order must be prime, got " + std::to_string(k));
    }
    if (2 * (k * k + k + 1) > kMaxVertices) {
        throw std::invalid_argument("projective plane of order " + std::to_string(k) + " exceeds the vertex cap");
    }
    ProjectivePlane plane;
    plane.order = k;
    auto q = static_cast<uint32_t>(k);
    for (uint32_t a = 0; a < q; ++a) {
        for (uint32_t b = 0; b < q; ++b) {
            plane.coords.push_back({1, a, b});
        }
    }
    for (uint32_t b = 0; b < q; ++b) {
        plane.coords.push_back({0, 1, b});
    }
    plane.coords.push_back({0, 0, 1});
    size_t n = plane.coords.size();
    plane.lines.resize(n);
    for (size_t l = 0; l < n; ++l) {
        const auto &lc = plane.coords[l];
        for (uint32_t p = 0; p < n; ++p) {
            const auto &pc = plane.coords[p];
            uint64_t dot = uint64_t{lc[0]} * pc[0] + uint64_t{lc[1]} * pc[1] + uint64_t{lc[2]} * pc[2];
            if (dot % k == 0) {
                plane.lines[l].push_back(p);
            }
        }
    }
    check_projective_axioms(plane);
    return plane;
}

void check_projective_axioms(const ProjectivePlane &plane) {
    size_t k = plane.order;
    size_t n = plane.size();
    if (n != k * k + k + 1 || plane.lines.size() != n) {
        throw std::logic_error("projective plane has the wrong number of points or lines");
    }
    std::vector<size_t> lines_through(n, 0);
    // Pairs of points per line, and pairs of lines per point.
    std::vector<uint32_t> point_pairs(n * n, 0);
    std::vector<std::vector<uint32_t>> point_lines(n);
    for (size_t l = 0; l < n; ++l) {
        const auto &pts = plane.lines[l];
        if (pts.size() != k + 1) {
            throw std::logic_error("line " + std::to_string(l) + " does not have k+1 points");
        }
        for (size_t a = 0; a < pts.size(); ++a) {
            ++lines_through[pts[a]];
            point_lines[pts[a]].push_back(static_cast<uint32_t>(l));
            for (size_t b = a + 1; b < pts.size(); ++b) {
                ++point_pairs[pts[a] * n + pts[b]];
            }
        }
    }
    for (size_t p = 0; p < n; ++p) {
        if (lines_through[p] != k + 1) {
            throw std::logic_error("point " + std::to_string(p) + " is not on k+1 lines");
        }
    }
    for (size_t a = 0; a < n; ++a) {
        for (size_t b = a + 1; b < n; ++b) {
            if (point_pairs[a * n + b] != 1) {
                throw std::logic_error("two points do not determine exactly one line");
            }
        }
    }
    std::vector<uint32_t> line_pairs(n * n, 0);
    for (size_t p = 0; p < n; ++p) {
        const auto &ls = point_lines[p];
        for (size_t a = 0; a < ls.size(); ++a) {
            for (size_t b = a + 1; b < ls.size(); ++b) {
                ++line_pairs[ls[a] * n + ls[b]];
            }
        }
    }
    for (size_t a = 0; a < n; ++a) {
        for (size_t b = a + 1; b < n; ++b) {
            if (line_pairs[a * n + b] != 1) {
                throw std::logic_error("two lines do not meet in exactly one point");
            }
        }
    }
}

Graph projective_incidence_graph(const ProjectivePlane &plane) {
    size_t n = plane.size();
    std::vector<Edge> edges;
    for (size_t l = 0; l < n; ++l) {
        for (uint32_t p : plane.lines[l]) {
            edges.push_back(Edge::make(p, static_cast<Vertex>(n + l)));
        }
    }
    return Graph::from_edges(2 * n, edges);
}

size_t largest_plane_prime(size_t t) {
    size_t best = 0;
    for (size_t p = 2; p * p + p + 1 <= t; ++p) {
        if (is_prime(p)) {
            best = p;
        }
    }
    return best;
}

Graph gen_projective_graph(size_t n_target) {
    if (n_target < kMinProjectiveTarget) {
        throw std::invalid_argument("projective generator needs n >= " + std::to_string(kMinProjectiveTarget));
    }
    if (n_target > kMaxVertices) {
        throw std::invalid_argument("n exceeds the vertex cap of " + std::to_string(kMaxVertices));
    }
    ProjectivePlane plane = make_projective_plane(largest_plane_prime(n_target / 2));
    Graph core = projective_incidence_graph(plane);
    return Graph::from_edges(n_target, core.edges());
}

Graph gen_k2p(size_t p) {
    if (p < 1) {
        throw std::invalid_argument("K_{2,p} needs p >= 1");
    }
    std::vector<Edge> edges;
    for (Vertex side = 0; side < 2; ++side) {
        for (size_t j = 0; j < p; ++j) {
            edges.push_back(Edge::make(side, static_cast<Vertex>(2 + j)));
        }
    }
    return Graph::from_edges(p + 2, edges);
}

Graph gen_cycle(size_t n) {
    if (n < 3) {
        throw std::invalid_argument("cycle needs n >= 3");
    }
    std::vector<Edge> edges;
    for (size_t i = 0; i < n; ++i) {
        edges.push_back(Edge::make(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n)));
    }
    return Graph::from_edges(n, edges);
}

Graph gen_complete(size_t n) {
    std::vector<Edge> edges;
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) {
            edges.push_back({a, b});
        }
    }
    return Graph::from_edges(n, edges);
}

Graph gen_path(size_t n) {
    std::vector<Edge> edges;
    for (Vertex i = 1; i < n; ++i) {
        edges.push_back({i - 1, i});
    }
    return Graph::from_edges(n, edges);
}

Graph gen_random_tree(size_t n, uint64_t seed) {
    CounterRng rng(seed);
    std::vector<Edge> edges;
    for (Vertex i = 1; i < n; ++i) {
        edges.push_back(Edge::make(static_cast<Vertex>(rng.below(i)), i));
    }
    return Graph::from_edges(n, edges);
}

Graph gen_gnp(size_t n, double p, uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("edge probability must lie in [0,1]");
    }
    CounterRng rng(seed);
    std::vector<Edge> edges;
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) {
            if (rng.uniform() < p) {
                edges.push_back({a, b});
            }
        }
    }
    return Graph::from_edges(n, edges);
}

ChordalSample gen_random_chordal(size_t n, double density, uint64_t seed) {
    if (n < 1) {
        throw std::invalid_argument("chordal generator needs n >= 1");
    }
    if (!(density >= 0.0 && density <= 1.0)) {
        throw std::invalid_argument("density must lie in [0,1]");
    }
    CounterRng rng(seed);
    std::vector<std::vector<Vertex>> cliques{{0}};
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) {
        size_t pick = static_cast<size_t>(rng.below(cliques.size()));
        std::vector<Vertex> joined;
        for (Vertex w : cliques[pick]) {
            if (rng.uniform() < density) {
                joined.push_back(w);
                edges.push_back({w, v});
            }
        }
        if (joined.size() == cliques[pick].size()) {
            cliques[pick].push_back(v);
        } else {
            joined.push_back(v);
            cliques.push_back(std::move(joined));
        }
    }
    // Relabel: insertion index i becomes label[i].
    Ordering shuffle = random_permutation(n, rng.next());
    const auto &label = shuffle.sequence();
    for (Edge &e : edges) {
        e = Edge::make(label[e.u], label[e.v]);
    }
    std::vector<Vertex> peo(label.rbegin(), label.rend());
    return {Graph::from_edges(n, edges), Ordering::from_sequence(std::move(peo))};
}

}  // namespace parityforge
