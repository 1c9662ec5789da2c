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


#ifndef PARITYFORGE_PARITYFORGE_H
#define PARITYFORGE_PARITYFORGE_H

#include "parityforge/bench.h"
#include "parityforge/betweenness.h"
#include "parityforge/circuit.h"
#include "parityforge/generators.h"
#include "parityforge/graph.h"
#include "parityforge/oracle.h"
#include "parityforge/ordering.h"
#include "parityforge/qasm.h"
#include "parityforge/recognition.h"
#include "parityforge/rng.h"
#include "parityforge/structure.h"
#include "parityforge/synthesis.h"

#endif  // PARITYFORGE_PARITYFORGE_H
