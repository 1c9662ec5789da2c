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


#include "commands.h"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include "json.hpp"
#include "parityforge/parityforge.h"

namespace parityforge::cli {

using nlohmann::json;

namespace {

std::string read_text(const std::string &path) {
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), {});
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open '" + path + "'");
    }
    return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_text(const std::string &path, const std::string &text) {
    if (path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw InputError("cannot write '" + path + "'");
    }
    out << text;
}

Graph load_graph(const std::string &path) {
    try {
        return parse_graph(read_text(path));
    } catch (const ParseError &e) {
        throw InputError(path + ": " + e.what());
    }
}

Circuit load_circuit(const std::string &path) {
    try {
        return parse_circuit(read_text(path));
    } catch (const ParseError &e) {
        throw InputError(path + ": " + e.what());
    }
}

/// Summary lines go to stdout unless stdout carries the artifact itself.
std::ostream &summary_stream(const std::string &artifact_path) {
    return artifact_path == "-" ? std::cerr : std::cout;
}

std::string edge_list(const std::vector<Edge> &edges) {
    std::ostringstream out;
    for (size_t i = 0; i < edges.size(); ++i) {
        out << (i ? " " : "") << edges[i].u + 1 << '-' << edges[i].v + 1;
    }
    return out.str();
}

std::string bool_word(bool b) {
    return b ? "true" : "false";
}

void check_against_bounds(const Graph &g, const SynthesisResult &r) {
    VerificationReport report = verify(r.circuit, g);
    if (!report.is_parity_network) {
        throw std::logic_error(std::string(method_name(r.method)) + " synthesis produced a circuit that does not verify");
    }
    BoundReport b = bounds(g);
    if (r.size < b.basic_lower || (b.girth5_lower && r.size < *b.girth5_lower)) {
        throw std::logic_error("synthesized circuit is smaller than a proven lower bound");
    }
}

}  // namespace

int cmd_gen(const GenOptions &o) {
    Graph g;
    const std::string &f = o.family;
    if (f == "projective") {
        g = gen_projective_graph(o.n);
    } else if (f == "plane") {
        g = projective_incidence_graph(make_projective_plane(o.k));
    } else if (f == "fano") {
        g = projective_incidence_graph(make_projective_plane(2));
    } else if (f == "k2p") {
        g = gen_k2p(o.p);
    } else if (f == "chordal") {
        ChordalSample sample = gen_random_chordal(o.n, o.density, o.seed);
        g = std::move(sample.graph);
        if (!o.peo_output.empty()) {
            write_text(o.peo_output, format_ordering(sample.peo));
        }
    } else if (f == "cycle") {
        g = gen_cycle(o.n);
    } else if (f == "complete") {
        g = gen_complete(o.n);
    } else if (f == "path") {
        g = gen_path(o.n);
    } else if (f == "tree") {
        g = gen_random_tree(o.n, o.seed);
    } else if (f == "gnp") {
        g = gen_gnp(o.n, o.prob, o.seed);
    } else {
        throw InputError("unknown family '" + f + "'");
    }
    if (g.num_vertices() > kMaxVertices) {
        throw InputError("graph exceeds the vertex cap");
    }
    write_text(o.output, format_graph(g));
    return kOk;
}

int cmd_synth(const SynthOptions &o) {
    Graph g = load_graph(o.graph);
    Method method = parse_method(o.method);
    SynthesisResult result;
    switch (method) {
        case Method::kTrivial:
            result = synth_trivial(g);
            break;
        case Method::kRandom:
            result = synth_random(g, o.seed);
            break;
        case Method::kPco: {
            Ordering order;
            if (!o.order.empty()) {
                try {
                    order = parse_ordering(read_text(o.order), g.num_vertices());
                } catch (const ParseError &e) {
                    throw InputError(o.order + ": " + e.what());
                }
            } else {
                RecognitionResult rec = recognize(g);
                if (rec.membership == Membership::kUnknown) {
                    throw BudgetError("could not decide whether the graph has a perfect cancellation ordering");
                }
                if (rec.membership == Membership::kNo) {
                    throw InputError("graph has no perfect cancellation ordering; use --method random or trivial");
                }
                order = *rec.witness;
            }
            result = synth_pco(g, order);
            break;
        }
    }
    check_against_bounds(g, result);
    write_text(o.output, format_circuit(result.circuit));
    size_t lower = bounds(g).basic_lower;
    std::ostream &out = summary_stream(o.output);
    if (o.json) {
        json j{{"method", method_name(method)}, {"size", result.size}, {"lower", lower},
               {"excess", result.size - lower}};
        if (result.seed) {
            j["seed"] = *result.seed;
        }
        out << j.dump() << '\n';
    } else {
        out << "size=" << result.size << " lower=" << lower << " excess=" << result.size - lower << '\n';
    }
    return kOk;
}

int cmd_verify(const VerifyCmdOptions &o) {
    Graph g = load_graph(o.graph);
    Circuit c = load_circuit(o.circuit);
    if (c.num_wires() != g.num_vertices()) {
        throw InputError("circuit has " + std::to_string(c.num_wires()) + " wires but graph has " +
                         std::to_string(g.num_vertices()) + " vertices");
    }
    VerificationReport r = verify(c, g, VerifyOptions{o.allow_permutation});
    if (o.json) {
        json j{{"is_parity_network", r.is_parity_network},
               {"size", r.size},
               {"covered_edges", r.covered_edges.size()},
               {"missing_edges", edge_list(r.missing_edges)},
               {"final_is_identity", r.final_is_identity},
               {"final_is_permutation", r.final_is_permutation},
               {"nonbinary_outcome_count", r.nonbinary_outcome_count}};
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "parity_network: " << bool_word(r.is_parity_network) << '\n'
                  << "size: " << r.size << '\n'
                  << "covered: " << r.covered_edges.size() << '/' << g.num_edges() << '\n'
                  << "missing: " << edge_list(r.missing_edges) << '\n'
                  << "final_identity: " << bool_word(r.final_is_identity) << '\n'
                  << "nonbinary_outcomes: " << r.nonbinary_outcome_count << '\n';
    }
    return r.is_parity_network ? kOk : kInputError;
}

int cmd_recognize(const RecognizeOptions &o) {
    Graph g = load_graph(o.graph);
    RecognitionResult r = recognize(g, o.budget ? o.budget : kDefaultRecognitionBudget);
    if (r.witness && !o.witness_output.empty()) {
        write_text(o.witness_output, format_ordering(*r.witness));
    }
    if (o.json) {
        json j{{"pcg", membership_name(r.membership)},
               {"method", recognition_method_name(r.method)},
               {"explored", r.explored}};
        if (r.witness) {
            std::vector<Vertex> labels;
            for (Vertex v : r.witness->sequence()) {
                labels.push_back(v + 1);
            }
            j["witness"] = labels;
        }
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "PCG: " << membership_name(r.membership) << '\n';
        std::cout << "method: " << recognition_method_name(r.method) << '\n';
        if (r.witness) {
            std::cout << "witness: " << format_ordering(*r.witness);
        }
    }
    return r.membership == Membership::kUnknown ? kBudgetExhausted : kOk;
}

int cmd_bound(const BoundOptions &o) {
    Graph g = load_graph(o.graph);
    BoundReport b = bounds(g);
    if (o.json) {
        json j{{"basic", b.basic_lower}, {"upper", b.trivial_upper}};
        j["girth5"] = b.girth5_lower ? json(std::to_string(*b.girth5_lower)) : json(nullptr);
        std::cout << j.dump() << '\n';
        return kOk;
    }
    std::cout << "basic_lower: " << b.basic_lower << '\n';
    if (b.girth5_lower) {
        std::cout << "girth5_lower: " << *b.girth5_lower << " (> " << *b.girth5_sixths << "/6)\n";
    } else {
        std::cout << "girth5_lower: none\n";
    }
    std::cout << "trivial_upper: " << b.trivial_upper << '\n';
    std::cout << "girth: " << (b.girth ? std::to_string(*b.girth) : std::string("inf")) << '\n';
    return kOk;
}

int cmd_oracle(const OracleOptions &o) {
    Graph g = load_graph(o.graph);
    if (g.num_vertices() > kOracleMaxVertices) {
        throw InputError("oracle supports at most " + std::to_string(kOracleMaxVertices) + " vertices");
    }
    auto start = std::chrono::steady_clock::now();
    OracleResult r = oracle_min_size(g, o.limit, o.budget ? o.budget : kDefaultOracleBudget);
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    json j;
    j["explored"] = r.explored;
    j["wall_ms"] = std::round(ms * 1000.0) / 1000.0;
    j["witness_file"] = nullptr;
    switch (r.status) {
        case OracleStatus::kOptimal:
            j["status"] = "optimal";
            j["min_size"] = r.min_size;
            j["shape"] = {{"terms_at_most_binary", r.shape.terms_at_most_binary},
                          {"has_unused_control_wire", r.shape.has_unused_control_wire},
                          {"inputs_stay_on_wire", r.shape.inputs_stay_on_wire}};
            if (!o.witness_output.empty()) {
                write_text(o.witness_output, format_circuit(r.witness));
                j["witness_file"] = o.witness_output;
            }
            break;
        case OracleStatus::kNoneWithinLimit:
            j["status"] = "none_within_limit";
            j["min_size"] = nullptr;
            break;
        case OracleStatus::kBudgetExhausted:
            j["status"] = "budget_exhausted";
            j["min_size"] = nullptr;
            break;
    }
    std::cout << j.dump() << '\n';
    return r.status == OracleStatus::kBudgetExhausted ? kBudgetExhausted : kOk;
}

int cmd_export(const ExportOptions &o) {
    Graph g = load_graph(o.graph);
    Circuit c = load_circuit(o.circuit);
    if (c.num_wires() != g.num_vertices()) {
        throw InputError("circuit and graph sizes differ");
    }
    write_text(o.output, export_qasm(c, g, o.theta));
    return kOk;
}

int cmd_bench(const BenchOptions &o) {
    BenchSpec spec;
    for (const auto &family : o.families) {
        for (size_t n : o.sizes) {
            spec.corpus.push_back(make_bench_graph(family, n, o.seed ^ n));
            if (family == "fano") {
                break;
            }
        }
    }
    spec.methods.clear();
    for (const auto &m : o.methods) {
        spec.methods.push_back(parse_method(m));
    }
    spec.trials = o.trials;
    spec.seed = o.seed;
    spec.threads = resolve_threads(o.threads);
    std::vector<BenchRecord> rows = run_bench(spec);
    write_text(o.output, bench_csv(rows));

    std::ostream &log = summary_stream(o.output);
    auto random_in = [](const std::string &family) {
        return [family](const BenchRecord &r) { return r.method == Method::kRandom && r.family == family; };
    };
    if (auto fit = fit_constant(rows, dense_basis, random_in("complete"))) {
        log << "fit complete: size - m ~ C * n log2 n, C=" << fit->constant << " points=" << fit->points
            << " rms=" << fit->rms << '\n';
        struct Acc {
            double overhead = 0.0;
            double excess = 0.0;
            size_t count = 0;
        };
        std::map<size_t, Acc> by_n;
        for (const auto &r : rows) {
            if (r.method == Method::kRandom && r.family == "complete") {
                by_n[r.n].overhead += static_cast<double>(r.size - r.m);
                by_n[r.n].excess += static_cast<double>(r.excess);
                ++by_n[r.n].count;
            }
        }
        for (const auto &[n, acc] : by_n) {
            log << "  n=" << n << " mean(size-m)/(n log2 n)=" << acc.overhead / acc.count / dense_basis(n)
                << " mean_excess=" << acc.excess / acc.count << '\n';
        }
    }
    if (auto fit = fit_constant(rows, sparse_basis, random_in("sparse"))) {
        log << "fit sparse: size - m ~ C' * n^1.5 sqrt(log2 n), C'=" << fit->constant << " points=" << fit->points
            << " rms=" << fit->rms << '\n';
    }
    return kOk;
}

int cmd_probe(const ProbeOptions &o) {
    if (o.max_n > 5) {
        throw InputError("probe supports --max-n up to 5");
    }
    ProbeReport report = conjecture_probe(o.max_n);
    std::ostringstream counterexamples;
    auto opt = [](const std::optional<bool> &b) { return b ? bool_word(*b) : std::string("unknown"); };
    json rows = json::array();
    for (const auto &row : report.rows) {
        bool decided = row.perpane && row.pcg != Membership::kUnknown;
        if (decided && !row.agree) {
            counterexamples << "# perpane=" << opt(row.perpane) << " pcg=" << membership_name(row.pcg) << '\n'
                            << format_graph(row.graph);
        }
        rows.push_back({{"edges", edge_signature(row.graph)},
                        {"n", row.n},
                        {"m", row.m},
                        {"min_size", row.min_size ? json(*row.min_size) : json(nullptr)},
                        {"basic_lower", row.basic_lower},
                        {"perpane", opt(row.perpane)},
                        {"pcg", membership_name(row.pcg)},
                        {"chordal", row.chordal},
                        {"agree", row.agree},
                        {"c1_binary_terms", row.shape.terms_at_most_binary},
                        {"c2_idle_control", row.shape.has_unused_control_wire},
                        {"c3_stay_on_wire", row.shape.inputs_stay_on_wire}});
    }
    if (report.discrepancies > 0) {
        write_text(o.counterexample_output, counterexamples.str());
    }
    if (o.json) {
        json j{{"rows", rows}, {"discrepancies", report.discrepancies}, {"undecided", report.undecided}};
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "n m min basic perpane pcg chordal agree c1 c2 c3 edges\n";
        for (const auto &row : report.rows) {
            std::cout << row.n << ' ' << row.m << ' ' << (row.min_size ? std::to_string(*row.min_size) : "?") << ' '
                      << row.basic_lower << ' ' << opt(row.perpane) << ' ' << membership_name(row.pcg) << ' '
                      << bool_word(row.chordal) << ' ' << bool_word(row.agree) << ' '
                      << bool_word(row.shape.terms_at_most_binary) << ' '
                      << bool_word(row.shape.has_unused_control_wire) << ' '
                      << bool_word(row.shape.inputs_stay_on_wire) << ' ' << edge_signature(row.graph)
                      << (row.perpane && !row.agree ? "  COUNTEREXAMPLE" : "") << '\n';
        }
        std::cout << "graphs=" << report.rows.size() << " discrepancies=" << report.discrepancies
                  << " undecided=" << report.undecided << '\n';
    }
    return kOk;
}

int cmd_reduce(const ReduceOptions &o) {
    BetweennessInstance inst;
    try {
        inst = parse_betweenness(read_text(o.instance));
    } catch (const ParseError &e) {
        throw InputError(o.instance + ": " + e.what());
    }
    BetweennessReduction red = reduce_betweenness(inst);
    write_text(o.output, format_graph(red.graph));
    if (!o.labels_output.empty()) {
        std::ostringstream labels;
        for (Vertex v = 0; v < red.graph.num_vertices(); ++v) {
            labels << v + 1 << ' ' << red.labels.name(v) << '\n';
        }
        write_text(o.labels_output, labels.str());
    }
    if (!o.order_output.empty()) {
        std::optional<Ordering> solution = solve_betweenness_brute(inst);
        if (!solution) {
            throw InputError("instance is unsatisfiable; no ordering to construct");
        }
        Ordering sigma = pco_from_betweenness_solution(inst, *solution);
        if (!is_pco(red.graph, sigma)) {
            throw std::logic_error("constructed ordering fails the PCO check");
        }
        write_text(o.order_output, format_ordering(sigma));
    }
    return kOk;
}

}  // namespace parityforge::cli
