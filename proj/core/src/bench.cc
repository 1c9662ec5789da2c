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


#include "parityforge/bench.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "parityforge/generators.h"
#include "parityforge/oracle.h"
#include "parityforge/recognition.h"
#include "parityforge/structure.h"

namespace parityforge {

std::vector<std::string> bench_families() {
    return {"complete", "sparse", "gnp-half", "chordal", "k2p", "cycle", "tree", "path", "projective", "fano"};
}

BenchGraph make_bench_graph(const std::string &family, size_t n, uint64_t seed) {
    BenchGraph out;
    out.family = family;
    if (family == "complete") {
        out.graph = gen_complete(n);
    } else if (family == "sparse") {
        out.graph = gen_gnp(n, n > 4 ? 4.0 / static_cast<double>(n) : 1.0, seed);
    } else if (family == "gnp-half") {
        out.graph = gen_gnp(n, 0.5, seed);
    } else if (family == "chordal") {
        out.graph = gen_random_chordal(n, 0.5, seed).graph;
    } else if (family == "k2p") {
        out.graph = gen_k2p(n >= 3 ? n - 2 : 1);
    } else if (family == "cycle") {
        out.graph = gen_cycle(n);
    } else if (family == "tree") {
        out.graph = gen_random_tree(n, seed);
    } else if (family == "path") {
        out.graph = gen_path(n);
    } else if (family == "projective") {
        out.graph = gen_projective_graph(n);
    } else if (family == "fano") {
        out.graph = projective_incidence_graph(make_projective_plane(2));
    } else {
        throw std::invalid_argument("unknown bench family '" + family + "'");
    }
    out.id = family + "-" + std::to_string(out.graph.num_vertices());
    return out;
}

namespace {

struct Task {
    size_t graph = 0;
    Method method = Method::kRandom;
    uint64_t seed = 0;
};

BenchRecord run_task(const BenchGraph &bg, const Task &task, const std::optional<Ordering> &pco) {
    const Graph &g = bg.graph;
    auto start = std::chrono::steady_clock::now();
    SynthesisResult result;
    switch (task.method) {
        case Method::kTrivial:
            result = synth_trivial(g);
            break;
        case Method::kPco:
            result = synth_pco(g, *pco);
            break;
        case Method::kRandom:
            result = synth_random(g, task.seed);
            break;
    }
    auto stop = std::chrono::steady_clock::now();
    VerificationReport report = verify(result.circuit, g);
    if (!report.is_parity_network) {
        throw std::logic_error("bench: " + std::string(method_name(task.method)) + " produced an invalid network for " +
                               bg.id);
    }
    BenchRecord r;
    r.graph_id = bg.id;
    r.family = bg.family;
    r.n = g.num_vertices();
    r.m = g.num_edges();
    r.method = task.method;
    r.seed = task.seed;
    r.size = result.size;
    r.basic_lower = bounds(g).basic_lower;
    if (r.size < r.basic_lower) {
        throw std::logic_error("bench: network below the m+n-c lower bound on " + bg.id);
    }
    r.excess = r.size - r.basic_lower;
    r.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    return r;
}

}  // namespace

std::vector<BenchRecord> run_bench(const BenchSpec &spec) {
    std::vector<std::optional<Ordering>> orderings(spec.corpus.size());
    bool want_pco = std::find(spec.methods.begin(), spec.methods.end(), Method::kPco) != spec.methods.end();
    std::vector<Task> tasks;
    for (size_t gi = 0; gi < spec.corpus.size(); ++gi) {
        if (want_pco) {
            RecognitionResult rec = recognize(spec.corpus[gi].graph);
            if (rec.membership == Membership::kYes) {
                orderings[gi] = rec.witness;
            }
        }
        for (Method method : spec.methods) {
            if (method == Method::kRandom) {
                for (size_t t = 0; t < std::max<size_t>(spec.trials, 1); ++t) {
                    tasks.push_back({gi, method, spec.seed ^ t});
                }
            } else if (method == Method::kTrivial || orderings[gi]) {
                tasks.push_back({gi, method, spec.seed});
            }
        }
    }

    std::vector<BenchRecord> rows(tasks.size());
    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    auto worker = [&]() {
        while (!failed.load()) {
            size_t k = next.fetch_add(1);
            if (k >= tasks.size()) {
                return;
            }
            try {
                const Task &task = tasks[k];
                rows[k] = run_task(spec.corpus[task.graph], task, orderings[task.graph]);
            } catch (...) {
                if (!failed.exchange(true)) {
                    failure = std::current_exception();
                }
            }
        }
    };
    size_t workers = std::clamp<size_t>(spec.threads, 1, std::max<size_t>(tasks.size(), 1));
    std::vector<std::thread> pool;
    for (size_t w = 1; w < workers; ++w) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto &t : pool) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return rows;
}

std::string bench_csv_header() {
    return "graph_id,n,m,method,seed,size,basic_lower,excess,wall_ms";
}

std::string bench_csv_row(const BenchRecord &r) {
    std::ostringstream out;
    out << r.graph_id << ',' << r.n << ',' << r.m << ',' << method_name(r.method) << ',' << r.seed << ',' << r.size
        << ',' << r.basic_lower << ',' << r.excess << ',';
    out.setf(std::ios::fixed);
    out.precision(3);
    out << r.wall_ms;
    return out.str();
}

std::string bench_csv(const std::vector<BenchRecord> &records) {
    std::string out = bench_csv_header() + "\n";
    for (const auto &r : records) {
        out += bench_csv_row(r) + "\n";
    }
    return out;
}

double dense_basis(size_t n) {
    auto x = static_cast<double>(n);
    return x * std::log2(x);
}

double sparse_basis(size_t n) {
    auto x = static_cast<double>(n);
    return std::pow(x, 1.5) * std::sqrt(std::log2(x));
}

std::optional<ConstantFit> fit_constant(const std::vector<BenchRecord> &records,
                                        const std::function<double(size_t)> &basis,
                                        const std::function<bool(const BenchRecord &)> &filter) {
    double xy = 0.0;
    double xx = 0.0;
    std::vector<std::pair<double, double>> points;
    for (const auto &r : records) {
        if (!filter(r)) {
            continue;
        }
        double x = basis(r.n);
        double y = static_cast<double>(r.size) - static_cast<double>(r.m);
        xy += x * y;
        xx += x * x;
        points.emplace_back(x, y);
    }
    if (points.empty() || xx == 0.0) {
        return std::nullopt;
    }
    ConstantFit fit;
    fit.constant = xy / xx;
    fit.points = points.size();
    double ss = 0.0;
    for (auto [x, y] : points) {
        double d = y - fit.constant * x;
        ss += d * d;
    }
    fit.rms = std::sqrt(ss / static_cast<double>(points.size()));
    return fit;
}

size_t resolve_threads(size_t requested) {
    size_t threads = requested;
    if (threads == 0) {
        threads = std::max<size_t>(std::thread::hardware_concurrency(), 1);
    }
    if (const char *env = std::getenv("PARITYFORGE_THREADS")) {
        char *end = nullptr;
        unsigned long cap = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && cap > 0) {
            threads = std::min<size_t>(threads, cap);
        }
    }
    return threads;
}

}  // namespace parityforge
