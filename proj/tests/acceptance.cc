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


// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance [--only N]... [--expect-fail N]... [--data DIR]
//
// Exit status is 0 when the set of failing criteria equals the set passed
// with --expect-fail, so a known failure stays visible without hiding new
// regressions (or an unexpected pass).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <functional>
#include <limits>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.h"
#include "parityforge/parityforge.h"

using namespace parityforge;

namespace {

// Pinned limits.
constexpr double kGoldenLimitMs = 1.0;
constexpr double kProbeLimitS = 300.0;
constexpr double kChordalLimitS = 60.0;
constexpr double kLinearExponentLow = 0.8;
constexpr double kLinearExponentHigh = 1.3;
constexpr double kRandomCorpusLimitS = 120.0;
constexpr double kDenseTrendLimitS = 120.0;
constexpr double kDenseTrendFactor = 2.0;
constexpr double kGirthLimitS = 60.0;
constexpr double kInverseLimitS = 1.0;
constexpr double kRecognitionLimitS = 10.0;
constexpr double kReductionLimitS = 10.0;

std::string g_data_dir =
#ifdef PARITYFORGE_TEST_DATA
    PARITYFORGE_TEST_DATA;
#else
    "tests/data";
#endif

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string read_file(const std::string &name) {
    std::ifstream in(g_data_dir + "/" + name);
    if (!in) {
        throw std::runtime_error("cannot open " + g_data_dir + "/" + name);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct Outcome {
    bool pass = false;
    std::string detail;
};

size_t perfect_size(const Graph &g) {
    return g.num_edges() + g.num_vertices() - components(g).count;
}

std::string fixed(double v, int digits = 3) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

std::string gate_text(const Gate &g) {
    return "(" + std::to_string(g.control + 1) + "," + std::to_string(g.target + 1) + ")";
}

Outcome golden_fixtures() {
    Graph diamond = parse_graph(read_file("diamond.g"));
    Circuit golden = parse_circuit(read_file("diamond_perfect.circuit"));
    auto start = Clock::now();
    SynthesisResult pco = synth_pco(diamond, Ordering::identity(4));
    SynthesisResult trivial = synth_trivial(diamond);
    double ms = seconds_since(start) * 1e3;

    bool pco_ok = verify(pco.circuit, diamond).is_parity_network;
    bool trivial_ok = verify(trivial.circuit, diamond).is_parity_network && trivial.size == 10;
    bool same = pco.circuit == golden;
    std::string detail = "trivial size " + std::to_string(trivial.size) + (trivial_ok ? " verified" : " BAD") +
                         "; pco size " + std::to_string(pco.size) + (pco_ok ? " verified" : " BAD");
    if (same) {
        detail += "; pco matches the golden diamond circuit gate-for-gate";
    } else {
        const auto &got = pco.circuit.gates();
        const auto &want = golden.gates();
        size_t k = 0;
        while (k < got.size() && k < want.size() && got[k] == want[k]) {
            ++k;
        }
        detail += "; pco differs from the golden diamond circuit at gate " + std::to_string(k + 1) + ": got " +
                  (k < got.size() ? gate_text(got[k]) : "end") + ", want " +
                  (k < want.size() ? gate_text(want[k]) : "end");
    }
    detail += "; " + fixed(ms) + " ms (limit " + fixed(kGoldenLimitMs, 1) + ")";
    return {pco_ok && trivial_ok && same && ms < kGoldenLimitMs, detail};
}

Outcome small_graph_lower_bound() {
    auto start = Clock::now();
    size_t total = 0;
    size_t chordal = 0;
    std::string problems;
    for (const Graph &g : connected_graphs_up_to_iso(4)) {
        ++total;
        size_t basic = g.num_edges() + g.num_vertices() - 1;
        OracleResult r = oracle_min_size(g);
        if (r.status != OracleStatus::kOptimal) {
            problems += " oracle-undecided[" + edge_signature(g) + "]";
            continue;
        }
        if (r.min_size < basic) {
            problems += " below-bound[" + edge_signature(g) + "]";
        }
        if (auto peo = lexbfs_peo(g)) {
            ++chordal;
            size_t achieved = synth_pco(g, *peo).size;
            if (r.min_size != basic || achieved != basic) {
                problems += " chordal-not-tight[" + edge_signature(g) + "]";
            }
        }
    }
    double s = seconds_since(start);
    std::string detail = std::to_string(total) + " connected graphs up to isomorphism, " + std::to_string(chordal) +
                         " chordal; " + fixed(s) + " s (limit " + fixed(kProbeLimitS, 0) + ")";
    if (!problems.empty()) {
        detail += ";" + problems;
    }
    return {problems.empty() && total == 10 && s < kProbeLimitS, detail};
}

Outcome chordal_perfect_and_linear() {
    auto start = Clock::now();
    std::vector<double> xs;
    std::vector<double> ys;
    size_t bad = 0;
    std::vector<ChordalSample> corpus;
    for (uint64_t i = 0; i < 200; ++i) {
        size_t n = 20 + static_cast<size_t>(i * 180 / 199);
        double density = 0.2 + 0.6 * static_cast<double>(i % 7) / 6.0;
        corpus.push_back(gen_random_chordal(n, density, 1000 + i));
    }
    // Untimed pass so clock ramp-up and cold caches do not land on the
    // smallest graphs, which are timed first.
    volatile size_t sink = 0;
    for (const ChordalSample &s : corpus) {
        sink = synth_pco(s.graph, s.peo).size;
    }
    (void)sink;
    for (const ChordalSample &s : corpus) {
        size_t n = s.graph.num_vertices();
        SynthesisResult r = synth_pco(s.graph, s.peo);
        if (r.size != perfect_size(s.graph) || !verify(r.circuit, s.graph).is_parity_network) {
            ++bad;
        }
        // Per-call time: repeat until at least 2 ms accumulate, and keep the
        // fastest of three such windows to filter out interference.
        double per_call = std::numeric_limits<double>::infinity();
        for (int window = 0; window < 3; ++window) {
            size_t reps = 0;
            auto t0 = Clock::now();
            double elapsed = 0;
            do {
                SynthesisResult again = synth_pco(s.graph, s.peo);
                if (again.size != r.size) {
                    ++bad;
                }
                ++reps;
                elapsed = seconds_since(t0);
            } while (elapsed < 2e-3);
            per_call = std::min(per_call, elapsed / static_cast<double>(reps));
        }
        xs.push_back(std::log(static_cast<double>(n + s.graph.num_edges())));
        ys.push_back(std::log(per_call));
    }
    double mx = 0;
    double my = 0;
    for (size_t k = 0; k < xs.size(); ++k) {
        mx += xs[k];
        my += ys[k];
    }
    mx /= static_cast<double>(xs.size());
    my /= static_cast<double>(ys.size());
    double sxy = 0;
    double sxx = 0;
    for (size_t k = 0; k < xs.size(); ++k) {
        sxy += (xs[k] - mx) * (ys[k] - my);
        sxx += (xs[k] - mx) * (xs[k] - mx);
    }
    double exponent = sxy / sxx;
    double s = seconds_since(start);
    bool linear = exponent >= kLinearExponentLow && exponent <= kLinearExponentHigh;
    std::string detail = "200 chordal graphs (n 20..200), " + std::to_string(bad) +
                         " size/verify failures; time ~ (n+m)^" + fixed(exponent) + " (allowed [" +
                         fixed(kLinearExponentLow, 1) + ", " + fixed(kLinearExponentHigh, 1) + "]); " + fixed(s) +
                         " s (limit " + fixed(kChordalLimitS, 0) + ")";
    return {bad == 0 && linear && s < kChordalLimitS, detail};
}

Outcome random_synthesis_corpus() {
    auto start = Clock::now();
    size_t failures = 0;
    size_t wide_terms = 0;
    size_t largest = 0;
    for (uint64_t i = 0; i < 500; ++i) {
        size_t n = 3 + static_cast<size_t>(i * 253 / 499);
        Graph g;
        switch (i % 5) {
            case 0:
                g = gen_gnp(n, 0.02 + 0.48 * static_cast<double>((i / 5) % 10) / 9.0, i);
                break;
            case 1:
                g = gen_random_chordal(n, 0.3, i).graph;
                break;
            case 2:
                g = gen_k2p(n - 2);
                break;
            case 3:
                g = gen_cycle(n);
                break;
            default:
                g = gen_projective_graph(std::max<size_t>(n, kMinProjectiveTarget));
                break;
        }
        largest = std::max(largest, g.num_vertices());
        Circuit c = synth_random(g, i).circuit;
        if (!verify(c, g).is_parity_network) {
            ++failures;
        }
        simulate_each(c, [&](size_t, Vertex, const Term &t) {
            if (t.count() > 2) {
                ++wide_terms;
            }
        });
    }
    double s = seconds_since(start);
    std::string detail = "500 graphs (gnp, chordal, K2p, cycle, projective; n <= " + std::to_string(largest) +
                         "), " + std::to_string(failures) + " unverified, " + std::to_string(wide_terms) +
                         " terms wider than 2; " + fixed(s) + " s (limit " + fixed(kRandomCorpusLimitS, 0) + ")";
    return {failures == 0 && wide_terms == 0 && largest <= 256 && s < kRandomCorpusLimitS, detail};
}

Outcome dense_trend() {
    auto start = Clock::now();
    std::vector<double> ratios;
    std::string detail;
    bool verified = true;
    for (size_t n : {32, 64, 128}) {
        Graph k = gen_complete(n);
        double extra = 0;
        double excess = 0;
        for (uint64_t seed = 0; seed < 20; ++seed) {
            SynthesisResult r = synth_random(k, seed);
            verified = verified && verify(r.circuit, k).is_parity_network;
            extra += static_cast<double>(r.size - k.num_edges());
            excess += static_cast<double>(r.size - perfect_size(k));
        }
        extra /= 20;
        excess /= 20;
        double ratio = extra / dense_basis(n);
        ratios.push_back(ratio);
        detail += "n=" + std::to_string(n) + " mean(size-m)/(n log2 n)=" + fixed(ratio, 4) +
                  " mean excess=" + fixed(excess, 2) + "; ";
    }
    bool bounded = true;
    for (size_t k = 0; k + 1 < ratios.size(); ++k) {
        double a = ratios[k];
        double b = ratios[k + 1];
        bounded = bounded && a > 0 && b > 0 && std::max(a, b) / std::min(a, b) <= kDenseTrendFactor;
    }
    double s = seconds_since(start);
    detail += "consecutive factor <= " + fixed(kDenseTrendFactor, 1) + "; " + fixed(s) + " s (limit " +
              fixed(kDenseTrendLimitS, 0) + ")";
    return {verified && bounded && s < kDenseTrendLimitS, detail};
}

Outcome girth_floor() {
    auto start = Clock::now();
    Graph fano = projective_incidence_graph(make_projective_plane(2));
    auto gi = girth(fano);
    BoundReport b = bounds(fano);
    bool shape = fano.num_vertices() == 14 && fano.num_edges() == 21 && gi && *gi >= 5 && b.girth5_lower;
    size_t floor_size = b.girth5_lower.value_or(0);
    size_t best = synth_trivial(fano).size;
    size_t runs = 1;
    size_t unverified = 0;
    for (uint64_t seed = 0; seed < 1000; ++seed) {
        SynthesisResult r = synth_random(fano, seed);
        if (!verify(r.circuit, fano).is_parity_network) {
            ++unverified;
            continue;
        }
        best = std::min(best, r.size);
        ++runs;
    }
    RecognitionResult rec = recognize(fano, 2'000'000);
    if (rec.membership == Membership::kYes) {
        best = std::min(best, synth_pco(fano, *rec.witness).size);
        ++runs;
    }
    double s = seconds_since(start);
    std::string detail = "n=14 m=21 girth=" + (gi ? std::to_string(*gi) : std::string("none")) + ", floor " +
                         std::to_string(floor_size) + "; " + std::to_string(runs) +
                         " verified networks (trivial + 1000 random seeds" +
                         (rec.membership == Membership::kYes ? " + pco" : "") + "), smallest " +
                         std::to_string(best) + "; " + fixed(s) + " s (limit " + fixed(kGirthLimitS, 0) + ")";
    return {shape && unverified == 0 && best >= floor_size && floor_size == 25 && s < kGirthLimitS, detail};
}

Outcome inverse_property() {
    auto start = Clock::now();
    std::mt19937_64 rng(20260);
    size_t mismatches = 0;
    size_t max_gates = 0;
    for (int t = 0; t < 200; ++t) {
        Circuit c = oracle::random_closed_circuit(2 + t % 9, 40, rng);
        max_gates = std::max(max_gates, c.size());
        auto forward = wire_histories(simulate(c));
        auto backward = wire_histories(simulate(inverse(c)));
        for (size_t w = 0; w < c.num_wires(); ++w) {
            if (!std::equal(backward[w].begin(), backward[w].end(), forward[w].rbegin(), forward[w].rend())) {
                ++mismatches;
            }
        }
    }
    double s = seconds_since(start);
    std::string detail = "200 input-restoring random circuits (n <= 10, <= " + std::to_string(max_gates) +
                         " gates), " + std::to_string(mismatches) + " wire mismatches; " + fixed(s * 1e3, 1) +
                         " ms (limit " + fixed(kInverseLimitS * 1e3, 0) + ")";
    return {mismatches == 0 && max_gates <= 40 && s < kInverseLimitS, detail};
}

Outcome recognition_ground_truth() {
    auto start = Clock::now();
    std::string problems;
    Graph c4 = gen_cycle(4);
    if (recognize(c4).membership != Membership::kNo) {
        problems += " C4";
    }
    std::vector<Edge> wheel_edges(c4.edges().begin(), c4.edges().end());
    for (Vertex v = 0; v < 4; ++v) {
        wheel_edges.push_back({v, 4});
    }
    Graph wheel = Graph::from_edges(5, wheel_edges);
    RecognitionResult w = recognize(wheel);
    if (w.membership != Membership::kYes || !w.witness || !is_pco(wheel, *w.witness)) {
        problems += " wheel";
    }
    size_t peos = 0;
    size_t positives = 0;
    for (uint64_t seed = 0; seed < 100; ++seed) {
        ChordalSample s = gen_random_chordal(5 + seed % 60, 0.4, seed);
        auto peo = lexbfs_peo(s.graph);
        if (!peo || !is_pco(s.graph, *peo)) {
            problems += " peo" + std::to_string(seed);
        }
        ++peos;
    }
    std::mt19937_64 rng(88);
    for (int t = 0; t < 300; ++t) {
        Graph g = oracle::random_graph(3 + t % 7, 0.3 + 0.1 * (t % 5), rng);
        RecognitionResult r = recognize(g);
        if (r.membership == Membership::kYes) {
            ++positives;
            if (!r.witness || !is_pco(g, *r.witness)) {
                problems += " witness" + std::to_string(t);
            }
        } else if (r.witness) {
            problems += " stray-witness" + std::to_string(t);
        }
    }
    double s = seconds_since(start);
    std::string detail = "C4 no, wheel yes; " + std::to_string(peos) + " chordal PEOs pass is_pco; " +
                         std::to_string(positives) + " positive answers on random graphs all with checked witnesses; " +
                         fixed(s) + " s (limit " + fixed(kRecognitionLimitS, 0) + ")";
    if (!problems.empty()) {
        detail += "; failed:" + problems;
    }
    return {problems.empty() && s < kRecognitionLimitS, detail};
}

Outcome reduction_soundness() {
    auto start = Clock::now();
    size_t good = 0;
    for (uint64_t seed = 0; seed < 20; ++seed) {
        size_t p = 3 + seed % 2;
        size_t q = 1 + (seed / 2) % 2;
        BetweennessInstance inst = random_satisfiable_betweenness(p, q, seed);
        BetweennessReduction red = reduce_betweenness(inst);
        auto sol = solve_betweenness_brute(inst);
        if (red.graph.num_vertices() == 2 * p + 14 * q && sol &&
            is_pco(red.graph, pco_from_betweenness_solution(inst, *sol))) {
            ++good;
        }
    }
    // No-direction, reported only: an unsatisfiable instance under a budget.
    BetweennessInstance clash{3, {{0, 1, 2}, {1, 0, 2}}};
    RecognitionResult no = recognize_reduction(clash, 2'000'000);
    double s = seconds_since(start);
    std::string detail = std::to_string(good) + "/20 satisfiable instances give 2p+14q vertices and a valid PCO; " +
                         "unsatisfiable probe (" + std::to_string(reduce_betweenness(clash).graph.num_vertices()) +
                         " vertices) answers " + std::string(membership_name(no.membership)) + " after " +
                         std::to_string(no.explored) + " nodes; " + fixed(s) + " s (limit " +
                         fixed(kReductionLimitS, 0) + ")";
    return {good == 20 && no.membership != Membership::kYes && s < kReductionLimitS, detail};
}

Outcome conjecture_table() {
    auto start = Clock::now();
    ProbeReport report = conjecture_probe(4);
    std::string artifact;
    if (report.discrepancies > 0) {
        artifact = "probe_counterexamples.txt";
        std::ofstream out(artifact);
        for (const ProbeRow &row : report.rows) {
            if (!row.agree) {
                out << edge_signature(row.graph) << " min_size=" << row.min_size.value_or(0)
                    << " pcg=" << membership_name(row.pcg) << "\n";
            }
        }
    }
    double s = seconds_since(start);
    std::string detail = std::to_string(report.rows.size()) + " rows, " + std::to_string(report.discrepancies) +
                         " discrepancies, " + std::to_string(report.undecided) + " undecided";
    if (!artifact.empty()) {
        detail += ", counterexamples flagged in " + artifact;
    }
    detail += "; " + fixed(s) + " s (limit " + fixed(kProbeLimitS, 0) + ")";
    return {report.undecided == 0 && s < kProbeLimitS, detail};
}

struct Criterion {
    int id;
    const char *title;
    std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char **argv) {
    std::set<int> only;
    std::set<int> expected_failures;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if ((arg == "--only" || arg == "--expect-fail" || arg == "--data") && i + 1 < argc) {
            std::string value = argv[++i];
            if (arg == "--data") {
                g_data_dir = value;
            } else {
                (arg == "--only" ? only : expected_failures).insert(std::stoi(value));
            }
        } else {
            std::fprintf(stderr, "usage: %s [--only N]... [--expect-fail N]... [--data DIR]\n", argv[0]);
            return 2;
        }
    }

    const std::vector<Criterion> criteria{
        {1, "golden fixtures", golden_fixtures},
        {2, "lower bound on small graphs", small_graph_lower_bound},
        {3, "perfect size and linear time on chordal graphs", chordal_perfect_and_linear},
        {4, "randomized synthesis correctness", random_synthesis_corpus},
        {5, "dense-case trend", dense_trend},
        {6, "girth-5 floor", girth_floor},
        {7, "inverse trace reversal", inverse_property},
        {8, "recognition ground truth", recognition_ground_truth},
        {9, "reduction soundness", reduction_soundness},
        {10, "perpane vs PCG probe", conjecture_table},
    };

#ifndef NDEBUG
    std::printf("note: assertions are enabled; the synthesizer's per-step invariant checks are superlinear, so "
                "criterion 3's timing fit is only meaningful in an optimized build\n");
#endif
    std::set<int> failed;
    for (const Criterion &c : criteria) {
        if (!only.empty() && !only.count(c.id)) {
            continue;
        }
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) {
            failed.insert(c.id);
        }
        std::printf("%s %2d %s: %s\n", o.pass ? "PASS" : "FAIL", c.id, c.title, o.detail.c_str());
        std::fflush(stdout);
    }

    std::set<int> expected;
    for (int id : expected_failures) {
        if (only.empty() || only.count(id)) {
            expected.insert(id);
        }
    }
    if (failed != expected) {
        std::printf("acceptance: failing set differs from the expected failures\n");
        return 1;
    }
    return 0;
}
