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


#include <gtest/gtest.h>

#include <regex>

#include "oracles.h"
#include "support.h"

using namespace parityforge;
using testing_support::circuit_from;
using testing_support::graph_from;
using testing_support::graph_of;
using testing_support::read_data;

namespace {

std::vector<bool> sieve(size_t limit) {
    std::vector<bool> prime(limit + 1, true);
    prime[0] = false;
    if (limit >= 1) {
        prime[1] = false;
    }
    for (size_t i = 2; i * i <= limit; ++i) {
        if (prime[i]) {
            for (size_t j = i * i; j <= limit; j += i) {
                prime[j] = false;
            }
        }
    }
    return prime;
}

/// Axioms from the raw coordinates, without using the plane's line lists.
void expect_axioms_from_coordinates(const ProjectivePlane &plane) {
    size_t k = plane.order;
    size_t total = plane.size();
    ASSERT_EQ(total, k * k + k + 1);
    auto on = [&](size_t point, size_t line) {
        uint64_t dot = 0;
        for (size_t c = 0; c < 3; ++c) {
            dot += uint64_t{plane.coords[point][c]} * plane.coords[line][c];
        }
        return dot % k == 0;
    };
    for (size_t a = 0; a < total; ++a) {
        size_t on_line = 0;
        size_t through = 0;
        for (size_t b = 0; b < total; ++b) {
            on_line += on(b, a);
            through += on(a, b);
        }
        EXPECT_EQ(on_line, k + 1);
        EXPECT_EQ(through, k + 1);
    }
    for (size_t a = 0; a < total; ++a) {
        for (size_t b = a + 1; b < total; ++b) {
            size_t shared_lines = 0;
            size_t shared_points = 0;
            for (size_t c = 0; c < total; ++c) {
                shared_lines += on(a, c) && on(b, c);
                shared_points += on(c, a) && on(c, b);
            }
            EXPECT_EQ(shared_lines, 1u);
            EXPECT_EQ(shared_points, 1u);
        }
    }
}

size_t count_matches(const std::string &text, const std::string &pattern) {
    std::regex re(pattern);
    return static_cast<size_t>(std::distance(std::sregex_iterator(text.begin(), text.end(), re), std::sregex_iterator()));
}

}  // namespace

TEST(Projective, FanoPlane) {
    ProjectivePlane fano = make_projective_plane(2);
    expect_axioms_from_coordinates(fano);
    Graph g = projective_incidence_graph(fano);
    EXPECT_EQ(g.num_vertices(), 14u);
    EXPECT_EQ(g.num_edges(), 21u);
    EXPECT_EQ(girth(g), 6u);
    for (Vertex v = 0; v < 14; ++v) {
        EXPECT_EQ(g.degree(v), 3u);
    }
    for (const Edge &e : g.edges()) {
        EXPECT_LT(e.u, 7u);
        EXPECT_GE(e.v, 7u);
    }
}

TEST(Projective, AxiomsForSmallPrimes) {
    for (size_t k : {2, 3, 5, 7}) {
        ProjectivePlane plane = make_projective_plane(k);
        expect_axioms_from_coordinates(plane);
        for (size_t l = 0; l < plane.size(); ++l) {
            EXPECT_EQ(plane.lines[l].size(), k + 1);
        }
        EXPECT_EQ(projective_incidence_graph(plane).num_edges(), (k * k + k + 1) * (k + 1));
    }
    EXPECT_THROW(make_projective_plane(4), std::invalid_argument);
    EXPECT_THROW(make_projective_plane(1), std::invalid_argument);
}

TEST(Projective, CorruptedPlaneFailsAxioms) {
    ProjectivePlane plane = make_projective_plane(3);
    plane.lines[0].pop_back();
    EXPECT_THROW(check_projective_axioms(plane), std::logic_error);
}

TEST(Projective, GeneratedGraphs) {
    Graph g = gen_projective_graph(42);
    EXPECT_EQ(g.num_vertices(), 42u);
    EXPECT_EQ(g.num_edges(), 52u);
    EXPECT_GE(*girth(g), 5u);
    size_t isolated = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        isolated += g.degree(v) == 0;
    }
    EXPECT_EQ(isolated, 16u);
    for (size_t n : {60, 100, 250, 600}) {
        Graph h = gen_projective_graph(n);
        EXPECT_EQ(h.num_vertices(), n);
        EXPECT_GE(*girth(h), 5u);
        size_t k = largest_plane_prime(n / 2);
        EXPECT_EQ(h.num_edges(), (k * k + k + 1) * (k + 1));
    }
    EXPECT_THROW(gen_projective_graph(kMinProjectiveTarget - 1), std::invalid_argument);
}

TEST(Projective, PrimeSearchGuarantee) {
    constexpr size_t kLimit = 1'000'000;
    std::vector<bool> prime = sieve(1100);
    auto plane_size = [](size_t p) { return p * p + p + 1; };
    size_t best = 0;
    size_t next = 2;
    for (size_t t = 1; t <= kLimit; ++t) {
        while (plane_size(next) <= t) {
            best = next;
            do {
                ++next;
            } while (!prime[next]);
        }
        if (t >= 21) {
            ASSERT_GT(4 * plane_size(best), t) << t;
        }
        if (t % 97 == 0 || t < 200 || plane_size(next) == t + 1) {
            ASSERT_EQ(largest_plane_prime(t), best) << t;
        }
    }
}

TEST(Primes, MatchesSieve) {
    std::vector<bool> prime = sieve(5000);
    for (size_t k = 0; k <= 5000; ++k) {
        EXPECT_EQ(is_prime(k), prime[k]) << k;
    }
}

TEST(SimpleFamilies, Shapes) {
    Graph k25 = gen_k2p(5);
    EXPECT_EQ(k25.num_vertices(), 7u);
    EXPECT_EQ(k25.num_edges(), 10u);
    EXPECT_FALSE(k25.has_edge(0, 1));
    EXPECT_TRUE(oracle::isomorphic(k25, graph_from("k25.g")));
    EXPECT_TRUE(oracle::isomorphic(gen_k2p(1), gen_path(3)));

    EXPECT_EQ(gen_cycle(5).num_edges(), 5u);
    EXPECT_EQ(girth(gen_cycle(5)), 5u);
    EXPECT_EQ(gen_complete(6).num_edges(), 15u);
    EXPECT_EQ(gen_path(6).num_edges(), 5u);

    Graph tree = gen_random_tree(40, 3);
    EXPECT_EQ(tree.num_edges(), 39u);
    EXPECT_EQ(oracle::component_count(tree), 1u);
    EXPECT_EQ(format_graph(gen_random_tree(40, 3)), format_graph(tree));

    Graph gnp = gen_gnp(30, 0.5, 9);
    EXPECT_EQ(format_graph(gen_gnp(30, 0.5, 9)), format_graph(gnp));
    EXPECT_EQ(gen_gnp(10, 1.0, 1).num_edges(), 45u);
    EXPECT_EQ(gen_gnp(10, 0.0, 1).num_edges(), 0u);
}

TEST(Chordal, Examples) {
    ChordalSample one = gen_random_chordal(1, 0.5, 0);
    EXPECT_EQ(one.graph.num_vertices(), 1u);
    for (uint64_t seed = 0; seed < 30; ++seed) {
        ChordalSample s = gen_random_chordal(30, 0.1 + 0.03 * static_cast<double>(seed), seed);
        EXPECT_EQ(s.graph.num_vertices(), 30u);
        EXPECT_TRUE(oracle::is_peo_definitional(s.graph, s.peo)) << seed;
        EXPECT_EQ(format_graph(gen_random_chordal(30, 0.1 + 0.03 * static_cast<double>(seed), seed).graph),
                  format_graph(s.graph));
    }
    EXPECT_EQ(gen_random_chordal(12, 1.0, 5).graph.num_edges(), 66u);
}

TEST(Qasm, PerfectDiamondGolden) {
    std::string text = export_qasm(circuit_from("diamond_perfect.circuit"), graph_from("diamond.g"), 0.5);
    EXPECT_EQ(text, read_data("diamond_perfect.qasm"));
    EXPECT_EQ(count_matches(text, "cx q"), 8u);
    EXPECT_EQ(count_matches(text, "rz\\("), 5u);
}

TEST(Qasm, EmptyAndSingleEdge) {
    EXPECT_EQ(export_qasm(Circuit(3), Graph(3), 1.0), "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[3];\n");
    Graph e = graph_of(2, {{1, 2}});
    std::string text = export_qasm(synth_trivial(e).circuit, e, 0.25);
    EXPECT_EQ(text, "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[2];\ncx q[0],q[1];\nrz(0.25) q[1];\ncx q[0],q[1];\n");
}

TEST(Qasm, RejectsNonNetwork) {
    EXPECT_THROW(export_qasm(Circuit(2, {{0, 1}}), graph_of(2, {{1, 2}}), 0.5), std::invalid_argument);
}

TEST(Qasm, GateCountsOnRandomGraphs) {
    std::mt19937_64 rng(10);
    for (int t = 0; t < 40; ++t) {
        Graph g = oracle::random_graph(2 + t % 12, 0.4, rng);
        Circuit c = synth_random(g, static_cast<uint64_t>(t)).circuit;
        std::string text = export_qasm(c, g, 0.125);
        EXPECT_EQ(count_matches(text, "cx q"), c.size());
        EXPECT_EQ(count_matches(text, "rz\\("), g.num_edges());
        EXPECT_EQ(text.rfind("OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[", 0), 0u);
    }
}
