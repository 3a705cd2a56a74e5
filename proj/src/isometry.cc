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

#include "clusterproof/isometry.h"

#include <algorithm>
#include <numeric>
#include <cmath>
#include <limits>

#include "clusterproof/bounds.h"
#include "clusterproof/errors.h"
#include "clusterproof/graphstate.h"

namespace clusterproof {

namespace {

constexpr double kJunkFloor = 1e-6;
constexpr double kBoundSlack = 1e-9;

const ProverSet &require_quantum(const ProverSet &p) {
    if (!p.quantum()) {
        throw InvalidArgument("the isometry needs quantum provers");
    }
    for (const auto &r : p.responders) {
        if (r.classical) {
            throw InvalidArgument("the isometry needs every prover to be quantum");
        }
    }
    return p;
}

double theta_of(const ProverSet &p, int v) { return p.theta.empty() ? 0.0 : p.theta[static_cast<size_t>(v)]; }

double expect(const ProverSet &p, const Query &q) { return query_expectation(p, q); }

/// (I (x) <b|_high) a, where b lives on the top qubits of a.
std::vector<Complex> partial_overlap(const StateVector &a, const StateVector &b) {
    size_t low = a.size() / b.size();
    std::vector<Complex> out(low, Complex(0));
    for (size_t o = 0; o < b.size(); o++) {
        Complex w = std::conj(b[o]);
        if (w == Complex(0)) {
            continue;
        }
        const Complex *row = &a.amplitudes()[o * low];
        for (size_t i = 0; i < low; i++) {
            out[i] += w * row[i];
        }
    }
    return out;
}

double distance_to_product(const StateVector &a, const std::vector<Complex> &junk, const StateVector &b) {
    size_t low = junk.size();
    double total = 0;
    for (size_t o = 0; o < b.size(); o++) {
        const Complex *row = &a.amplitudes()[o * low];
        for (size_t i = 0; i < low; i++) {
            total += std::norm(row[i] - junk[i] * b[o]);
        }
    }
    return std::sqrt(total);
}

double norm_of(const std::vector<Complex> &v) {
    double t = 0;
    for (const auto &x : v) {
        t += std::norm(x);
    }
    return std::sqrt(t);
}

}  // namespace

std::string ObservableLabel::str() const {
    switch (kind) {
        case Kind::Identity:
            return "I";
        case Kind::X:
            return "X:" + std::to_string(vertex);
        case Kind::Z:
            return "Z:" + std::to_string(vertex);
        case Kind::RPlus:
            return "R+:" + std::to_string(vertex);
        case Kind::RMinus:
            return "R-:" + std::to_string(vertex);
        case Kind::Product:
            break;
    }
    return "XZ:q=" + q.str() + ",p=" + p.str();
}

std::vector<ObservableLabel> single_vertex_labels(int n) {
    using K = ObservableLabel::Kind;
    std::vector<ObservableLabel> out{ObservableLabel::identity()};
    for (int v = 0; v < n; v++) {
        for (K k : {K::X, K::Z, K::RPlus, K::RMinus}) {
            out.push_back(ObservableLabel::single(k, v));
        }
    }
    return out;
}

PhiLayout phi_layout(const ProverSet &p) {
    require_quantum(p);
    return PhiLayout{p.state->num_qubits(), p.size()};
}

StateVector apply_phi(const ProverSet &p, const StateVector &input) {
    PhiLayout layout = phi_layout(p);
    if (input.num_qubits() != layout.system) {
        throw InvalidArgument("isometry input has the wrong number of qubits");
    }
    if (layout.total() > qubit_cap()) {
        throw CapacityExceeded("isometry output needs " + std::to_string(layout.total()) + " qubits, cap is " +
                               std::to_string(qubit_cap()));
    }
    int n = layout.n;
    std::vector<Complex> pairs(size_t{1} << (2 * n), Complex(0));
    double a = std::pow(2.0, -0.5 * n);
    for (size_t s = 0; s < (size_t{1} << n); s++) {
        pairs[s | (s << n)] = a;
    }
    StateVector out = input.tensor(StateVector::from_amplitudes(std::move(pairs)));
    for (int v = 0; v < n; v++) {
        const Responder &r = p.responder(v);
        const Matrix &x = r.observable(QueryLabel::X);
        const Matrix &z = r.observable(QueryLabel::Z);
        // Fuse the five gates into one unitary on [block..., out_v] so the
        // large register is swept once per vertex.
        int k = static_cast<int>(r.qubits.size());
        std::vector<int> block(static_cast<size_t>(k));
        std::iota(block.begin(), block.end(), 0);
        Matrix fused(size_t{1} << (k + 1));
        for (size_t j = 0; j < fused.dim(); j++) {
            std::vector<Complex> e(fused.dim(), Complex(0));
            e[j] = 1;
            StateVector col = StateVector::from_amplitudes(std::move(e));
            col.apply_controlled(x, k, block);
            col.apply_h(k);
            col.apply_controlled(z, k, block);
            col.apply_h(k);
            col.apply_controlled(x, k, block);
            for (size_t i = 0; i < fused.dim(); i++) {
                fused(i, j) = col[i];
            }
        }
        std::vector<int> targets = r.qubits;
        targets.push_back(layout.out(v));
        out.apply(fused, targets);
    }
    return out;
}

StateVector apply_phi(const ProverSet &p) { return apply_phi(p, *require_quantum(p).state); }

void apply_prover_label(StateVector &s, const ProverSet &p, const ObservableLabel &label) {
    using K = ObservableLabel::Kind;
    switch (label.kind) {
        case K::Identity:
            return;
        case K::X:
            apply_label(s, p, label.vertex, QueryLabel::X);
            return;
        case K::Z:
            apply_label(s, p, label.vertex, QueryLabel::Z);
            return;
        case K::RPlus:
            apply_label(s, p, label.vertex, QueryLabel::RPlus);
            return;
        case K::RMinus:
            apply_label(s, p, label.vertex, QueryLabel::RMinus);
            return;
        case K::Product:
            for (int v : label.p.indices()) {
                apply_label(s, p, v, QueryLabel::Z);
            }
            for (int v : label.q.indices()) {
                apply_label(s, p, v, QueryLabel::X);
            }
            return;
    }
}

void apply_ideal_label(StateVector &s, const ObservableLabel &label, const std::vector<double> &theta) {
    using K = ObservableLabel::Kind;
    auto angle = [&theta](int v) { return theta.empty() ? 0.0 : theta.at(static_cast<size_t>(v)); };
    switch (label.kind) {
        case K::Identity:
            return;
        case K::X:
            s.apply(Matrix::pauli_x(), label.vertex);
            return;
        case K::Z:
            s.apply(Matrix::pauli_z(), label.vertex);
            return;
        case K::RPlus:
            s.apply(Matrix::xz_plane(angle(label.vertex)), label.vertex);
            return;
        case K::RMinus:
            s.apply(Matrix::xz_plane(-angle(label.vertex)), label.vertex);
            return;
        case K::Product:
            for (int v : label.p.indices()) {
                s.apply(Matrix::pauli_z(), v);
            }
            for (int v : label.q.indices()) {
                s.apply(Matrix::pauli_x(), v);
            }
            return;
    }
}

double graph_deviation(const ProverSet &p, const Graph &g) {
    if (p.size() != g.n()) {
        throw InvalidArgument("prover count does not match the graph");
    }
    double eps = 0;
    for (int v = 0; v < g.n(); v++) {
        Query q = Query::ignore_all(g.n());
        q.bases[static_cast<size_t>(v)] = QueryLabel::X;
        for (int u : g.row(v).indices()) {
            q.bases[static_cast<size_t>(u)] = QueryLabel::Z;
        }
        eps = std::max(eps, 1 - expect(p, q));
    }
    for (const auto &tau : triangle_cover(g).triangles) {
        Query q = Query::ignore_all(g.n());
        for (int v : tau.indices()) {
            q.bases[static_cast<size_t>(v)] = QueryLabel::X;
        }
        for (int u : g.multiply(tau).indices()) {
            q.bases[static_cast<size_t>(u)] = QueryLabel::Z;
        }
        eps = std::max(eps, 1 + expect(p, q));
    }
    return eps;
}

double rotation_deviation(const ProverSet &p, const Graph &g, int v, int u, int t) {
    if (!g.adjacent(u, v)) {
        throw InvalidArgument("rotation_deviation needs an edge (u, v)");
    }
    double theta = theta_of(p, v);
    QueryLabel rotated = t > 0 ? QueryLabel::RPlus : QueryLabel::RMinus;

    Query first = Query::ignore_all(g.n());
    for (int w : g.row(v).indices()) {
        first.bases[static_cast<size_t>(w)] = QueryLabel::Z;
    }
    first.bases[static_cast<size_t>(v)] = rotated;

    Query second = Query::ignore_all(g.n());
    BitString zs = g.row(u);
    zs.flip(static_cast<size_t>(v));
    for (int w : zs.indices()) {
        second.bases[static_cast<size_t>(w)] = QueryLabel::Z;
    }
    second.bases[static_cast<size_t>(u)] = QueryLabel::X;
    second.bases[static_cast<size_t>(v)] = rotated;

    return 1 - (std::cos(theta) * expect(p, first) + t * std::sin(theta) * expect(p, second));
}

double anticommutator_norm(const ProverSet &p, int v) {
    require_quantum(p);
    StateVector xz = *p.state;
    apply_label(xz, p, v, QueryLabel::Z);
    apply_label(xz, p, v, QueryLabel::X);
    StateVector zx = *p.state;
    apply_label(zx, p, v, QueryLabel::X);
    apply_label(zx, p, v, QueryLabel::Z);
    double total = 0;
    for (size_t i = 0; i < xz.size(); i++) {
        total += std::norm(xz[i] + zx[i]);
    }
    return std::sqrt(total);
}

bool EquivalenceReport::all_satisfied() const {
    return std::all_of(labels.begin(), labels.end(), [](const LabelReport &r) { return r.satisfied; }) &&
           std::all_of(anticommutators.begin(), anticommutators.end(),
                       [](const AnticommutatorReport &r) { return r.satisfied; });
}

double EquivalenceReport::max_distance() const {
    double best = 0;
    for (const auto &r : labels) {
        best = std::max(best, r.distance);
    }
    return best;
}

EquivalenceReport equivalence_distance(const ProverSet &p, const Graph &g, const std::vector<ObservableLabel> &labels) {
    using K = ObservableLabel::Kind;
    require_quantum(p);
    if (p.size() != g.n()) {
        throw InvalidArgument("prover count does not match the graph");
    }
    int n = g.n();
    int edges = static_cast<int>(g.edge_count());
    EquivalenceReport report;
    report.eps_graph = graph_deviation(p, g);

    StateVector graph_state = build_graph_state(g).state;
    std::vector<Complex> junk = partial_overlap(apply_phi(p), graph_state);
    report.junk_overlap = norm_of(junk);
    if (report.junk_overlap < kJunkFloor) {
        throw JunkDegenerate("overlap of the isometry output with the graph state is " +
                             std::to_string(report.junk_overlap));
    }
    for (auto &x : junk) {
        x /= report.junk_overlap;
    }
    report.junk_qubits = phi_layout(p).total() - n;

    // Per-label overlaps are kept so that a common junk state can be re-fit.
    std::vector<std::vector<Complex>> overlaps;
    std::vector<double> squared_norms;
    for (const auto &label : labels) {
        LabelReport row;
        row.label = label;
        StateVector input = *p.state;
        apply_prover_label(input, p, label);
        StateVector a = apply_phi(p, input);
        StateVector b = graph_state;
        apply_ideal_label(b, label, p.theta);
        row.distance = distance_to_product(a, junk, b);
        overlaps.push_back(partial_overlap(a, b));
        squared_norms.push_back(a.norm() * a.norm());

        if (label.kind == K::RPlus || label.kind == K::RMinus) {
            int v = label.vertex;
            auto nbrs = g.row(v).indices();
            if (nbrs.empty()) {
                throw InvalidArgument("rotation label on isolated vertex " + std::to_string(v));
            }
            int u = nbrs.front();
            int t = label.kind == K::RPlus ? 1 : -1;
            double eps = std::max(report.eps_graph, rotation_deviation(p, g, v, u, t));
            double pp = std::max(g.degree(v), g.degree(u) - 1);
            double delta = graph_test_bound(pp, n, edges, eps);
            row.bound = rotation_bound(eps, delta);
            row.bound_name = "rotation";
            row.eps = eps;
        } else {
            double pp = 0;
            if (label.kind == K::Z) {
                pp = 1;
            } else if (label.kind == K::Product) {
                pp = dot(label.p, label.p);
            }
            row.bound = graph_test_bound(pp, n, edges, report.eps_graph);
            row.bound_name = "graph-test";
            row.eps = report.eps_graph;
        }
        row.satisfied = row.distance <= row.bound + kBoundSlack;
        report.labels.push_back(row);
    }

    for (int v = 0; v < n; v++) {
        AnticommutatorReport row;
        row.vertex = v;
        row.norm = anticommutator_norm(p, v);
        row.bound = 4 * std::sqrt(2 * report.eps_graph);
        row.satisfied = row.norm <= row.bound + kBoundSlack;
        report.anticommutators.push_back(row);
    }

    bool labels_ok = std::all_of(report.labels.begin(), report.labels.end(),
                                 [](const LabelReport &r) { return r.satisfied; });
    if (!labels_ok && !labels.empty()) {
        // The best single junk for all labels at once maximizes
        // sum_M Re <j|overlap_M>, which is the normalized sum of overlaps.
        std::vector<Complex> common(junk.size(), Complex(0));
        for (const auto &o : overlaps) {
            for (size_t i = 0; i < o.size(); i++) {
                common[i] += o[i];
            }
        }
        double norm = norm_of(common);
        if (norm >= kJunkFloor) {
            std::vector<double> refit;
            double old_excess = -std::numeric_limits<double>::infinity();
            double new_excess = -std::numeric_limits<double>::infinity();
            for (size_t k = 0; k < overlaps.size(); k++) {
                Complex inner = 0;
                for (size_t i = 0; i < common.size(); i++) {
                    inner += std::conj(common[i] / norm) * overlaps[k][i];
                }
                double d = std::sqrt(std::max(0.0, squared_norms[k] + 1 - 2 * inner.real()));
                refit.push_back(d);
                old_excess = std::max(old_excess, report.labels[k].distance - report.labels[k].bound);
                new_excess = std::max(new_excess, d - report.labels[k].bound);
            }
            if (new_excess < old_excess) {
                report.junk_refit = true;
                for (size_t k = 0; k < refit.size(); k++) {
                    auto &row = report.labels[k];
                    row.distance = refit[k];
                    row.satisfied = row.distance <= row.bound + kBoundSlack;
                }
            }
        }
    }
    return report;
}

}  // namespace clusterproof
