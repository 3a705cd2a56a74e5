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

#include "clusterproof/graphstate.h"

#include <cmath>

#include "clusterproof/errors.h"

namespace clusterproof {

GraphState build_graph_state(const Graph &g) {
    if (g.n() < 1) {
        throw InvalidArgument("graph state needs at least one vertex");
    }
    GraphState gs{g, plus_state(g.n())};
    for (auto [u, v] : g.edges()) {
        gs.state.apply_cz(u, v);
    }
    return gs;
}

double amplitude(const Graph &g, const BitString &x) {
    double sign = (induced_edge_count(g, x) & 1) ? -1.0 : 1.0;
    return sign * std::pow(2.0, -0.5 * g.n());
}

ProductObservable stabilizer(const Graph &g, int v) {
    ProductObservable o;
    o.set(v, SingleQubitObservable::x());
    for (int u : g.row(v).indices()) {
        o.set(u, SingleQubitObservable::z());
    }
    return o;
}

PauliString stabilizer_pauli(const Graph &g, int v) {
    auto n = static_cast<size_t>(g.n());
    return PauliString(BitString::unit(n, static_cast<size_t>(v)), g.row(v));
}

ProductObservable triangle_operator(const Graph &g, const BitString &tau) {
    if (tau.size() != static_cast<size_t>(g.n()) || tau.popcount() != 3) {
        throw NotATriangle("triangle indicator must have exactly three ones");
    }
    auto vs = tau.indices();
    if (!g.adjacent(vs[0], vs[1]) || !g.adjacent(vs[0], vs[2]) || !g.adjacent(vs[1], vs[2])) {
        throw NotATriangle("vertices " + tau.str() + " are not pairwise adjacent");
    }
    BitString z = g.multiply(tau);
    // Each triangle vertex has exactly two neighbours inside tau, so the two
    // supports are disjoint.
    ProductObservable o;
    for (int v : vs) {
        o.set(v, SingleQubitObservable::x());
    }
    for (int u : z.indices()) {
        o.set(u, SingleQubitObservable::z());
    }
    return o;
}

PauliString stabilizer_product(const Graph &g, const BitString &t) {
    PauliString out(static_cast<size_t>(g.n()));
    for (int v : t.indices()) {
        out = out * stabilizer_pauli(g, v);
    }
    return out;
}

LcTransform lc_generator_transform(const Graph &g, int v) {
    if (v < 0 || v >= g.n()) {
        throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
    }
    static const char kSwapZY[4] = {'I', 'X', 'Z', 'Y'};
    static const char kSwapXY[4] = {'I', 'Y', 'X', 'Z'};

    LcTransform out;
    out.complemented = local_complement(g, v);
    BitString nbrs = g.row(v);
    PauliString sv = stabilizer_pauli(g, v);
    for (int u = 0; u < g.n(); u++) {
        PauliString s = stabilizer_pauli(g, u);
        std::string line = "S_" + std::to_string(u);
        if (nbrs.get(static_cast<size_t>(u))) {
            s = s * sv;
            line += " -> S_" + std::to_string(u) + " S_" + std::to_string(v);
        }
        s = s.relabeled(static_cast<size_t>(v), kSwapZY);
        for (int w : nbrs.indices()) {
            s = s.relabeled(static_cast<size_t>(w), kSwapXY);
        }
        line += " -> " + s.str();
        out.generators.push_back(s);
        out.descriptions.push_back(line);
    }
    return out;
}

LcCheck check_lc_transform(const Graph &g, int v) {
    LcTransform t = lc_generator_transform(g, v);
    LcCheck check;
    const auto &gens = t.generators;

    check.commuting = true;
    for (size_t i = 0; i < gens.size(); i++) {
        for (size_t j = i + 1; j < gens.size(); j++) {
            check.commuting &= gens[i].commutes_with(gens[j]);
        }
    }
    check.independent = symplectic_rank(gens) == g.n();

    check.matches_standard = true;
    for (int u = 0; u < g.n(); u++) {
        PauliString standard = stabilizer_pauli(t.complemented, u);
        check.matches_standard &= gens[u].x == standard.x && gens[u].z == standard.z;
    }

    GraphState gs = build_graph_state(t.complemented);
    check.stabilizing = true;
    for (const auto &p : gens) {
        if (!p.is_hermitian()) {
            check.stabilizing = false;
            break;
        }
        check.stabilizing &= std::abs(std::abs(expectation(gs.state, p)) - 1) < 1e-10;
    }
    return check;
}

}  // namespace clusterproof
