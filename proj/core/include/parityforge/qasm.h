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


#ifndef PARITYFORGE_QASM_H
#define PARITYFORGE_QASM_H

#include <string>

#include "parityforge/circuit.h"
#include "parityforge/graph.h"

namespace parityforge {

/// OpenQASM 2.0 for exp(i theta H) with one ZZ term per edge: a `cx` per
/// gate, and an `rz(theta)` on the target right after the first gate whose
/// result is a given edge term. Wire i maps to q[i-1]. Throws
/// std::invalid_argument if `c` is not a graphic parity network for `g`.
std::string export_qasm(const Circuit &c, const Graph &g, double theta);

}  // namespace parityforge

#endif  // PARITYFORGE_QASM_H
