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


#include "parityforge/qasm.h"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace parityforge {

std::string export_qasm(const Circuit &c, const Graph &g, double theta) {
    VerificationReport report = verify(c, g);
    if (!report.is_parity_network) {
        throw std::invalid_argument("circuit is not a graphic parity network for the graph (" +
                                    std::to_string(report.missing_edges.size()) + " edges missing, final state " +
                                    (report.final_is_identity ? "restored" : "not restored") + ")");
    }
    std::ostringstream angle;
    angle.precision(std::numeric_limits<double>::max_digits10);
    angle << theta;

    std::ostringstream out;
    out << "OPENQASM 2.0;\n";
    out << "include \"qelib1.inc\";\n";
    out << "qreg q[" << c.num_wires() << "];\n";
    std::vector<bool> phased(g.num_edges(), false);
    simulate_each(c, [&](size_t k, Vertex wire, const Term &term) {
        const Gate &gate = c[k];
        out << "cx q[" << gate.control << "],q[" << gate.target << "];\n";
        Vertex a = 0;
        Vertex b = 0;
        if (!term.binary_members(a, b)) {
            return;
        }
        size_t e = g.edge_index(a, b);
        if (e < g.num_edges() && !phased[e]) {
            phased[e] = true;
            out << "rz(" << angle.str() << ") q[" << wire << "];\n";
        }
    });
    return out.str();
}

}  // namespace parityforge
