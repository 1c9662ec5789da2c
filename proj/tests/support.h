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


#ifndef PARITYFORGE_TESTS_SUPPORT_H
#define PARITYFORGE_TESTS_SUPPORT_H

#include <fstream>
#include <iterator>
#include <stdexcept>
#include <string>
#include <vector>

#include "parityforge/parityforge.h"

namespace testing_support {

inline std::string data_path(const std::string &name) {
    return std::string(PARITYFORGE_TEST_DATA) + "/" + name;
}

inline std::string read_data(const std::string &name) {
    std::ifstream in(data_path(name), std::ios::binary);
    if (!in) {
        throw std::runtime_error("missing test data " + name);
    }
    return std::string(std::istreambuf_iterator<char>(in), {});
}

inline parityforge::Graph graph_from(const std::string &name) {
    return parityforge::parse_graph(read_data(name));
}

inline parityforge::Circuit circuit_from(const std::string &name) {
    return parityforge::parse_circuit(read_data(name));
}

/// Ordering from 1-based labels.
inline parityforge::Ordering order_of(std::initializer_list<parityforge::Vertex> one_based) {
    std::vector<parityforge::Vertex> seq;
    for (auto v : one_based) {
        seq.push_back(v - 1);
    }
    return parityforge::Ordering::from_sequence(seq);
}

/// Graph from 1-based edge pairs.
inline parityforge::Graph graph_of(size_t n, std::initializer_list<std::pair<int, int>> one_based) {
    std::vector<parityforge::Edge> edges;
    for (auto [a, b] : one_based) {
        edges.push_back(parityforge::Edge::make(static_cast<parityforge::Vertex>(a - 1),
                                                static_cast<parityforge::Vertex>(b - 1)));
    }
    return parityforge::Graph::from_edges(n, edges);
}

/// 1-based (control, target) pairs.
inline std::vector<std::pair<int, int>> gate_pairs(const parityforge::Circuit &c) {
    std::vector<std::pair<int, int>> out;
    for (const auto &g : c.gates()) {
        out.emplace_back(static_cast<int>(g.control) + 1, static_cast<int>(g.target) + 1);
    }
    return out;
}

/// Terms as "{1,2}" strings.
inline std::vector<std::string> step_terms(const parityforge::Circuit &c) {
    std::vector<std::string> out;
    for (const auto &step : parityforge::simulate(c).steps) {
        out.push_back(step.term.to_string());
    }
    return out;
}

}  // namespace testing_support

#endif  // PARITYFORGE_TESTS_SUPPORT_H
