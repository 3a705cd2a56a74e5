// Copyright 2026 The clusterproof Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CLUSTERPROOF_GRAPHSTATE_H
#define CLUSTERPROOF_GRAPHSTATE_H

#include <string>
#include <vector>

#include "clusterproof/graph.h"
#include "clusterproof/pauli.h"
#include "clusterproof/statevec.h"

namespace clusterproof {

struct GraphState {
    Graph graph;
    StateVector state;
};

/// prod over edges of CZ_uv applied to |+>^n.
GraphState build_graph_state(const Graph &g);

/// (-1)^(edges induced by x) / 2^(n/2).
double amplitude(const Graph &g, const BitString &x);

/// X_v Z^(A 1_v).
ProductObservable stabilizer(const Graph &g, int v);
PauliString stabilizer_pauli(const Graph &g, int v);

/// X^tau Z^(A tau). Throws NotATriangle unless tau marks three pairwise
/// adjacent vertices.
ProductObservable triangle_operator(const Graph &g, const BitString &tau);

/// Product of the generators S_v over the support of t, in ascending order.
PauliString stabilizer_product(const Graph &g, const BitString &t);

/// Generators obtained from those of g by replacing S_u with S_u S_v for
/// each neighbour u of v, then exchanging Z and Y on v and X and Y on each
/// neighbour. The result generates the stabilizer group of the locally
/// complemented graph up to signs.
struct LcTransform {
    Graph complemented;
    std::vector<PauliString> generators;
    /// One line per generator, e.g. "S_2 -> S_2 S_1 -> +XZZ".
    std::vector<std::string> descriptions;
};

LcTransform lc_generator_transform(const Graph &g, int v);

struct LcCheck {
    bool commuting = false;
    bool independent = false;
    /// Every generator has expectation +-1 on the complemented graph state.
    bool stabilizing = false;
    /// Generator u equals the standard generator of vertex u, ignoring sign.
    bool matches_standard = false;

    bool ok() const { return commuting && independent && stabilizing && matches_standard; }
};

LcCheck check_lc_transform(const Graph &g, int v);

}  // namespace clusterproof

#endif
