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


// parityforge: synthesize, verify, bound and minimize CNOT parity networks.

#include <iostream>

#include "CLI11.hpp"
#include "commands.h"
#include "parityforge/graph.h"

using namespace parityforge::cli;

int main(int argc, char **argv) {
    CLI::App app{"Graphic parity network toolkit"};
    app.require_subcommand(1);

    GenOptions gen;
    auto *gen_cmd = app.add_subcommand("gen", "Generate a graph");
    gen_cmd->add_option("family", gen.family,
                        "projective | plane | fano | k2p | chordal | cycle | complete | path | tree | gnp")
        ->required();
    gen_cmd->add_option("--n", gen.n, "Vertex count");
    gen_cmd->add_option("--p", gen.p, "Leaves of K_{2,p}");
    gen_cmd->add_option("--k", gen.k, "Prime plane order (plane)");
    gen_cmd->add_option("--density", gen.density, "Chordal join probability")->check(CLI::Range(0.0, 1.0));
    gen_cmd->add_option("--prob", gen.prob, "G(n,p) edge probability")->check(CLI::Range(0.0, 1.0));
    gen_cmd->add_option("--seed", gen.seed, "RNG seed");
    gen_cmd->add_option("-o,--output", gen.output, "Graph file (default stdout)");
    gen_cmd->add_option("--peo-out", gen.peo_output, "Write the elimination ordering (chordal)");

    SynthOptions synth;
    auto *synth_cmd = app.add_subcommand("synth", "Synthesize a parity network");
    synth_cmd->add_option("graph", synth.graph, "Graph file")->required();
    synth_cmd->add_option("--method", synth.method, "trivial | pco | random");
    synth_cmd->add_option("--order", synth.order, "Ordering file for pco (default: recognizer)");
    synth_cmd->add_option("--seed", synth.seed, "Seed for random");
    synth_cmd->add_option("-o,--output", synth.output, "Circuit file (default stdout)");
    synth_cmd->add_flag("--json", synth.json, "JSON summary");

    VerifyCmdOptions ver;
    auto *verify_cmd = app.add_subcommand("verify", "Check a circuit against a graph");
    verify_cmd->add_option("graph", ver.graph, "Graph file")->required();
    verify_cmd->add_option("circuit", ver.circuit, "Circuit file")->required();
    verify_cmd->add_flag("--allow-permutation", ver.allow_permutation,
                         "Accept any final state of distinct singletons");
    verify_cmd->add_flag("--json", ver.json, "JSON output");

    RecognizeOptions rec;
    auto *rec_cmd = app.add_subcommand("recognize", "Perfect cancellation graph membership");
    rec_cmd->add_option("graph", rec.graph, "Graph file")->required();
    rec_cmd->add_option("--budget", rec.budget, "Search node budget");
    rec_cmd->add_option("--witness-out", rec.witness_output, "Write the witness ordering");
    rec_cmd->add_flag("--json", rec.json, "JSON output");

    BoundOptions bound;
    auto *bound_cmd = app.add_subcommand("bound", "Lower and upper size bounds");
    bound_cmd->add_option("graph", bound.graph, "Graph file")->required();
    bound_cmd->add_flag("--json", bound.json, "JSON output");

    OracleOptions orc;
    auto *oracle_cmd = app.add_subcommand("oracle", "Exact minimum size (n <= 5)");
    oracle_cmd->add_option("graph", orc.graph, "Graph file")->required();
    oracle_cmd->add_option("--limit", orc.limit, "Gate cap (default 2m)");
    oracle_cmd->add_option("--budget", orc.budget, "Search node budget");
    oracle_cmd->add_option("--witness-out", orc.witness_output, "Write the optimal circuit");

    ExportOptions exp;
    auto *export_cmd = app.add_subcommand("export", "OpenQASM 2.0 with Rz insertion");
    export_cmd->add_option("graph", exp.graph, "Graph file")->required();
    export_cmd->add_option("circuit", exp.circuit, "Circuit file")->required();
    export_cmd->add_option("--theta", exp.theta, "Rotation angle in radians");
    export_cmd->add_option("-o,--output", exp.output, "QASM file (default stdout)");

    BenchOptions bench;
    auto *bench_cmd = app.add_subcommand("bench", "Synthesis benchmark, CSV output");
    bench_cmd->add_option("--families", bench.families, "Comma-separated families")->delimiter(',');
    bench_cmd->add_option("--sizes", bench.sizes, "Comma-separated vertex counts")->delimiter(',');
    bench_cmd->add_option("--methods", bench.methods, "Comma-separated methods")->delimiter(',');
    bench_cmd->add_option("--trials", bench.trials, "Random trials per graph");
    bench_cmd->add_option("--seed", bench.seed, "Base seed; trial i uses seed ^ i");
    bench_cmd->add_option("--threads", bench.threads, "Workers (0 = all cores)");
    bench_cmd->add_option("-o,--output", bench.output, "CSV file (default stdout)");

    ProbeOptions probe;
    auto *probe_cmd = app.add_subcommand("probe", "Perfect-size vs perfect-cancellation table on small graphs");
    probe_cmd->add_option("--max-n", probe.max_n, "Largest vertex count (<= 5)");
    probe_cmd->add_flag("--json", probe.json, "JSON output");
    probe_cmd->add_option("--counterexamples", probe.counterexample_output,
                          "File receiving disagreeing graphs, if any");

    ReduceOptions red;
    auto *reduce_cmd = app.add_subcommand("reduce", "Build the graph of a betweenness instance");
    reduce_cmd->add_option("instance", red.instance, "Betweenness file")->required();
    reduce_cmd->add_option("-o,--output", red.output, "Graph file (default stdout)");
    reduce_cmd->add_option("--labels-out", red.labels_output, "Write vertex names");
    reduce_cmd->add_option("--order-out", red.order_output, "Solve and write the constructed ordering");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*gen_cmd) {
            return cmd_gen(gen);
        }
        if (*synth_cmd) {
            return cmd_synth(synth);
        }
        if (*verify_cmd) {
            return cmd_verify(ver);
        }
        if (*rec_cmd) {
            return cmd_recognize(rec);
        }
        if (*bound_cmd) {
            return cmd_bound(bound);
        }
        if (*oracle_cmd) {
            return cmd_oracle(orc);
        }
        if (*export_cmd) {
            return cmd_export(exp);
        }
        if (*bench_cmd) {
            return cmd_bench(bench);
        }
        if (*probe_cmd) {
            return cmd_probe(probe);
        }
        if (*reduce_cmd) {
            return cmd_reduce(red);
        }
    } catch (const BudgetError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBudgetExhausted;
    } catch (const InputError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const parityforge::ParseError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInternalError;
    }
    return kInternalError;
}
