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

#include <algorithm>
#include <random>

#include "oracles.h"
#include "support.h"

using namespace parityforge;
using testing_support::graph_from;
using testing_support::graph_of;
using testing_support::order_of;

namespace {

/// Subgraph induced by one block's edges, relabelled 0..b-1 in vertex order.
std::pair<Graph, Ordering> restrict_to_block(const std::vector<Vertex> &verts, const std::vector<Edge> &edges,
                                             const Ordering &order) {
    std::vector<Vertex> sorted = verts;
    std::sort(sorted.begin(), sorted.end());
    auto local = [&](Vertex v) {
        return static_cast<Vertex>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin());
    };
    std::vector<Edge> local_edges;
    for (const Edge &e : edges) {
        local_edges.push_back(Edge::make(local(e.u), local(e.v)));
    }
    std::vector<Vertex> by_position = sorted;
    std::sort(by_position.begin(), by_position.end(), [&](Vertex a, Vertex b) { return order.before(a, b); });
    for (Vertex &v : by_position) {
        v = local(v);
    }
    return {Graph::from_edges(sorted.size(), local_edges), Ordering::from_sequence(by_position)};
}

}  // namespace

TEST(OrderingBasics, FromSequenceValidates) {
    EXPECT_THROW(Ordering::from_sequence({0, 0}), std::invalid_argument);
    EXPECT_THROW(Ordering::from_sequence({0, 2}), std::invalid_argument);
    Ordering o = order_of({3, 1, 2});
    EXPECT_EQ(o.position(2), 0u);
    EXPECT_TRUE(o.before(0, 1));
    EXPECT_EQ(o.reversed(), order_of({2, 1, 3}));
}

TEST(OrderingText, ParseAndFormat) {
    Ordering o = parse_ordering("2 4\n1 3\n", 4);
    EXPECT_EQ(o, order_of({2, 4, 1, 3}));
    EXPECT_EQ(format_ordering(o), "2 4 1 3\n");
    EXPECT_THROW(parse_ordering("1 2", 3), ParseError);
    EXPECT_THROW(parse_ordering("1 1 2", 3), ParseError);
    EXPECT_THROW(parse_ordering("1 2 4", 3), ParseError);
}

TEST(SigmaLinked, Examples) {
    Graph d = graph_from("diamond.g");
    Ordering id = Ordering::identity(4);
    std::vector<Vertex> small{2};
    EXPECT_TRUE(is_sigma_linked(d, id, small));
    EXPECT_TRUE(is_sigma_linked(d, id, std::vector<Vertex>{}));
    EXPECT_TRUE(is_sigma_linked(d, id, std::vector<Vertex>{1, 2, 3}));
    EXPECT_FALSE(is_sigma_linked(d, id, std::vector<Vertex>{1, 3}));
    // {2,3,4} in order 2,4,3 puts the non-edge 2-4 next to each other.
    EXPECT_FALSE(is_sigma_linked(d, order_of({1, 2, 4, 3}), std::vector<Vertex>{1, 2, 3}));
}

TEST(Pco, DiamondBothDirections) {
    Graph d = graph_from("diamond.g");
    EXPECT_TRUE(is_pco(d, order_of({1, 2, 3, 4})));
    EXPECT_TRUE(is_pco(d, order_of({4, 3, 2, 1})));
}

TEST(Pco, ViolationNamesVertexAndComponent) {
    Graph d = graph_from("diamond.g");
    PcoCheck c = check_pco(d, order_of({1, 2, 4, 3}));
    ASSERT_FALSE(c.ok);
    ASSERT_TRUE(c.violation.has_value());
    EXPECT_EQ(c.violation->vertex, 0u);
    EXPECT_EQ(c.violation->component, (std::vector<Vertex>{1, 2, 3}));
}

TEST(Pco, FourCycleHasNone) {
    Graph c4 = graph_from("c4.g");
    EXPECT_FALSE(oracle::find_ordering(4, [&](const Ordering &o) { return is_pco(c4, o); }).has_value());
}

TEST(Pco, ForestsAcceptEveryOrdering) {
    Graph path = graph_of(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}});
    Graph star = graph_of(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}});
    std::mt19937_64 rng(5);
    for (int t = 0; t < 30; ++t) {
        Ordering o = oracle::random_ordering(5, rng);
        EXPECT_TRUE(is_pco(path, o));
        EXPECT_TRUE(is_pco(star, o));
    }
}

TEST(Pco, SizeMismatchThrows) {
    EXPECT_THROW(check_pco(graph_from("diamond.g"), Ordering::identity(3)), std::invalid_argument);
}

TEST(Peo, Examples) {
    Graph d = graph_from("diamond.g");
    EXPECT_TRUE(is_peo(d, order_of({2, 1, 3, 4})));
    EXPECT_FALSE(is_peo(d, order_of({1, 2, 3, 4})));
    EXPECT_FALSE(oracle::find_ordering(4, [&](const Ordering &o) { return is_peo(graph_from("c4.g"), o); }));
}

TEST(LexBfs, Examples) {
    auto peo = lexbfs_peo(graph_from("diamond.g"));
    ASSERT_TRUE(peo.has_value());
    EXPECT_EQ(*peo, order_of({4, 3, 2, 1}));
    EXPECT_FALSE(lexbfs_peo(graph_from("c4.g")).has_value());
    EXPECT_FALSE(lexbfs_peo(graph_from("k25.g")).has_value());
    EXPECT_TRUE(lexbfs_peo(Graph(0)).has_value());
}

TEST(OrderingProperties, ChordalPeoIsPco) {
    for (uint64_t seed = 0; seed < 100; ++seed) {
        size_t n = 1 + seed % 30;
        double density = 0.2 + 0.8 * static_cast<double>(seed % 5) / 4.0;
        ChordalSample s = gen_random_chordal(n, density, seed);
        ASSERT_TRUE(oracle::is_peo_definitional(s.graph, s.peo)) << seed;
        EXPECT_TRUE(is_peo(s.graph, s.peo));
        EXPECT_TRUE(is_pco(s.graph, s.peo)) << seed;
        EXPECT_TRUE(oracle::is_pco_definitional(s.graph, s.peo)) << seed;
        auto lex = lexbfs_peo(s.graph);
        ASSERT_TRUE(lex.has_value()) << seed;
        EXPECT_TRUE(oracle::is_peo_definitional(s.graph, *lex));
    }
}

TEST(OrderingProperties, PeoMatchesDefinition) {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 400; ++t) {
        size_t n = 2 + t % 9;
        Graph g = oracle::random_graph(n, 0.3 + 0.1 * (t % 6), rng);
        Ordering o = oracle::random_ordering(n, rng);
        EXPECT_EQ(is_peo(g, o), oracle::is_peo_definitional(g, o));
        if (n <= 7) {
            bool chordal = oracle::find_ordering(n, [&](const Ordering &x) {
                               return oracle::is_peo_definitional(g, x);
                           }).has_value();
            EXPECT_EQ(lexbfs_peo(g).has_value(), chordal);
        }
    }
}

TEST(OrderingProperties, CheckPcoMatchesDefinition) {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 2000; ++t) {
        size_t n = 2 + t % 10;
        Graph g = oracle::random_graph(n, 0.2 + 0.1 * (t % 7), rng);
        Ordering o = oracle::random_ordering(n, rng);
        PcoCheck c = check_pco(g, o);
        ASSERT_EQ(c.ok, oracle::is_pco_definitional(g, o)) << format_graph(g) << format_ordering(o);
        if (!c.ok) {
            // The witness component must actually break the condition.
            Vertex v = c.violation->vertex;
            std::vector<Vertex> later;
            for (Vertex w : c.violation->component) {
                ASSERT_NE(w, v);
                if (g.has_edge(v, w) && o.before(v, w)) {
                    later.push_back(w);
                }
            }
            EXPECT_FALSE(is_sigma_linked(g, o, later));
            auto comps = oracle::components_without(g, v);
            bool found = false;
            for (auto comp : comps) {
                std::sort(comp.begin(), comp.end());
                found = found || comp == c.violation->component;
            }
            EXPECT_TRUE(found);
        }
    }
}

TEST(OrderingProperties, PcoIsBlockwise) {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 500; ++t) {
        size_t n = 3 + t % 10;
        Graph g = oracle::random_graph(n, 0.15 + 0.05 * (t % 8), rng);
        Ordering o = oracle::random_ordering(n, rng);
        auto bic = biconnected(g);
        bool all_blocks = true;
        for (size_t b = 0; b < bic.blocks.size(); ++b) {
            auto [sub, sub_order] = restrict_to_block(bic.blocks[b], bic.block_edges[b], o);
            all_blocks = all_blocks && oracle::is_pco_definitional(sub, sub_order);
        }
        EXPECT_EQ(is_pco(g, o), all_blocks);
    }
}
