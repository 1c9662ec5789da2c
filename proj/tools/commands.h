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


#ifndef PARITYFORGE_TOOLS_COMMANDS_H
#define PARITYFORGE_TOOLS_COMMANDS_H

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace parityforge::cli {

enum ExitCode : int { kOk = 0, kInputError = 1, kInternalError = 2, kBudgetExhausted = 3 };

/// Search gave up; maps to exit code 3.
class BudgetError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Bad user input that is not a parse error (missing file, bad flag value).
class InputError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct GenOptions {
    std::string family;
    size_t n = 0;
    size_t p = 0;
    size_t k = 0;
    double density = 0.5;
    double prob = 0.5;
    uint64_t seed = 0;
    std::string output = "-";
    std::string peo_output;
};

struct SynthOptions {
    std::string graph;
    std::string method = "pco";
    std::string order;
    uint64_t seed = 0;
    std::string output = "-";
    bool json = false;
};

struct VerifyCmdOptions {
    std::string graph;
    std::string circuit;
    bool allow_permutation = false;
    bool json = false;
};

struct RecognizeOptions {
    std::string graph;
    uint64_t budget = 0;
    std::string witness_output;
    bool json = false;
};

struct BoundOptions {
    std::string graph;
    bool json = false;
};

struct OracleOptions {
    std::string graph;
    size_t limit = 0;
    uint64_t budget = 0;
    std::string witness_output;
};

struct ExportOptions {
    std::string graph;
    std::string circuit;
    double theta = 0.5;
    std::string output = "-";
};

struct BenchOptions {
    std::vector<std::string> families{"complete"};
    std::vector<size_t> sizes{32, 64, 128};
    std::vector<std::string> methods{"random"};
    size_t trials = 20;
    uint64_t seed = 1;
    size_t threads = 0;
    std::string output = "-";
};

struct ProbeOptions {
    size_t max_n = 4;
    bool json = false;
    std::string counterexample_output = "counterexamples.txt";
};

struct ReduceOptions {
    std::string instance;
    std::string output = "-";
    std::string labels_output;
    std::string order_output;
};

int cmd_gen(const GenOptions &o);
int cmd_synth(const SynthOptions &o);
int cmd_verify(const VerifyCmdOptions &o);
int cmd_recognize(const RecognizeOptions &o);
int cmd_bound(const BoundOptions &o);
int cmd_oracle(const OracleOptions &o);
int cmd_export(const ExportOptions &o);
int cmd_bench(const BenchOptions &o);
int cmd_probe(const ProbeOptions &o);
int cmd_reduce(const ReduceOptions &o);

}  // namespace parityforge::cli

#endif  // PARITYFORGE_TOOLS_COMMANDS_H
