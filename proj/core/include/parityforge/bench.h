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


#ifndef PARITYFORGE_BENCH_H
#define PARITYFORGE_BENCH_H

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "parityforge/graph.h"
#include "parityforge/synthesis.h"

namespace parityforge {

struct BenchGraph {
    std::string id;
    std::string family;
    Graph graph;
};

/// One synthesis run. CSV columns, in order:
/// graph_id,n,m,method,seed,size,basic_lower,excess,wall_ms
struct BenchRecord {
    std::string graph_id;
    std::string family;
    size_t n = 0;
    size_t m = 0;
    Method method = Method::kRandom;
    uint64_t seed = 0;
    size_t size = 0;
    size_t basic_lower = 0;
    size_t excess = 0;
    double wall_ms = 0.0;
};

struct BenchSpec {
    std::vector<BenchGraph> corpus;
    std::vector<Method> methods{Method::kRandom};
    /// Random method only; trial i runs with seed ^ i. The deterministic
    /// methods run once per graph.
    size_t trials = 1;
    uint64_t seed = 0;
    size_t threads = 1;
};

/// Family names accepted by make_bench_graph.
std::vector<std::string> bench_families();

/// Builds one corpus member. Families: complete, sparse (G(n, p) with
/// p = 4/n), gnp-half (p = 1/2), chordal (density 0.5), k2p (n - 2 leaves),
/// cycle, tree, path, projective (n >= 42), fano (n ignored). Throws
/// std::invalid_argument for unknown families.
BenchGraph make_bench_graph(const std::string &family, size_t n, uint64_t seed);

/// Runs every (graph, method, trial) on up to spec.threads workers. Rows come
/// back in corpus order, then method order, then trial order, regardless of
/// scheduling. Every circuit is verified; a failure throws std::logic_error.
/// The pco method uses the recognizer's ordering and skips graphs that are
/// not (or not provably) perfect cancellation graphs.
std::vector<BenchRecord> run_bench(const BenchSpec &spec);

std::string bench_csv_header();
std::string bench_csv_row(const BenchRecord &r);
std::string bench_csv(const std::vector<BenchRecord> &records);

/// Least-squares constant C in (size - m) ~ C * basis(n) over the records
/// accepted by `filter`; nullopt when no record matches.
struct ConstantFit {
    double constant = 0.0;
    size_t points = 0;
    /// Root-mean-square residual.
    double rms = 0.0;
};

/// basis(n) = n log2 n.
double dense_basis(size_t n);
/// basis(n) = n^1.5 sqrt(log2 n).
double sparse_basis(size_t n);

std::optional<ConstantFit> fit_constant(const std::vector<BenchRecord> &records,
                                        const std::function<double(size_t)> &basis,
                                        const std::function<bool(const BenchRecord &)> &filter);

/// Worker count: `requested` (0 = hardware concurrency), capped by the
/// PARITYFORGE_THREADS environment variable when set.
size_t resolve_threads(size_t requested);

}  // namespace parityforge

#endif  // PARITYFORGE_BENCH_H
