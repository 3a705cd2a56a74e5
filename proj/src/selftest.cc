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

#include "clusterproof/selftest.h"

#include <cmath>

#include "clusterproof/errors.h"
#include "clusterproof/parallel.h"

namespace clusterproof {

namespace {

double x_branch_weight(double theta) {
    double c = std::cos(theta);
    return c / (c + std::abs(std::sin(theta)));
}

}  // namespace

TestParameters TestParameters::make(const Graph &g, std::vector<double> theta) {
    TestParameters p;
    p.graph = g;
    p.cover = triangle_cover(g);
    p.theta = std::move(theta);
    for (int v = 0; v < g.n(); v++) {
        auto nbrs = g.row(v).indices();
        p.u_choice.push_back(nbrs.empty() ? -1 : nbrs.front());
    }
    p.validate();
    return p;
}

void TestParameters::validate() const {
    int n = graph.n();
    if (theta.size() != static_cast<size_t>(n) || u_choice.size() != static_cast<size_t>(n)) {
        throw InvalidArgument("test parameters need one angle and one reference neighbour per vertex");
    }
    if (!is_valid_cover(graph, cover)) {
        throw InvalidArgument("triangle cover is not valid for the graph");
    }
    for (int v = 0; v < n; v++) {
        int u = u_choice[static_cast<size_t>(v)];
        if (u < 0 || u >= n || !graph.adjacent(u, v)) {
            throw InvalidArgument("reference neighbour of vertex " + std::to_string(v) + " is not adjacent");
        }
        double c = std::cos(theta[static_cast<size_t>(v)]);
        if (c < -1e-12) {
            throw InvalidArgument("angle for vertex " + std::to_string(v) + " has negative cosine");
        }
    }
}

const char *subtest_name(SubtestKind kind) {
    switch (kind) {
        case SubtestKind::Vertex:
            return "VERTEX";
        case SubtestKind::Triangle:
            return "TRIANGLE";
        case SubtestKind::RThetaX:
            return "RTHETA_X";
        case SubtestKind::RThetaZ:
            break;
    }
    return "RTHETA_Z";
}

std::string Subtest::str() const {
    std::string out = subtest_name(kind);
    out += "(" + std::to_string(index);
    if (kind == SubtestKind::RThetaX || kind == SubtestKind::RThetaZ) {
        out += t > 0 ? ",+" : ",-";
    }
    return out + ")";
}

Query subtest_query(const TestParameters &params, const Subtest &s) {
    const Graph &g = params.graph;
    Query q = Query::ignore_all(g.n());
    auto set = [&q](int v, QueryLabel label) { q.bases[static_cast<size_t>(v)] = label; };
    QueryLabel rotated = s.t > 0 ? QueryLabel::RPlus : QueryLabel::RMinus;
    switch (s.kind) {
        case SubtestKind::Vertex:
            set(s.index, QueryLabel::X);
            for (int u : g.row(s.index).indices()) {
                set(u, QueryLabel::Z);
            }
            break;
        case SubtestKind::Triangle: {
            const BitString &tau = params.cover.triangles.at(static_cast<size_t>(s.index));
            for (int v : tau.indices()) {
                set(v, QueryLabel::X);
            }
            for (int u : g.multiply(tau).indices()) {
                set(u, QueryLabel::Z);
            }
            break;
        }
        case SubtestKind::RThetaX:
            set(s.index, rotated);
            for (int u : g.row(s.index).indices()) {
                set(u, QueryLabel::Z);
            }
            break;
        case SubtestKind::RThetaZ: {
            int u = params.u_choice.at(static_cast<size_t>(s.index));
            BitString zs = g.row(u);
            zs.flip(static_cast<size_t>(s.index));
            for (int w : zs.indices()) {
                set(w, QueryLabel::Z);
            }
            set(u, QueryLabel::X);
            set(s.index, rotated);
            q.sign = s.t;
            break;
        }
    }
    return q;
}

int subtest_target(const Subtest &s) { return s.kind == SubtestKind::Triangle ? -1 : 1; }

Subtest sample_subtest(const TestParameters &params, Rng &rng) {
    int n = params.n();
    int triangles = static_cast<int>(params.cover.triangles.size());
    int k = static_cast<int>(rng.below(static_cast<size_t>(params.n_g())));
    Subtest s;
    if (k < n) {
        s.kind = SubtestKind::Vertex;
        s.index = k;
        return s;
    }
    k -= n;
    if (k < triangles) {
        s.kind = SubtestKind::Triangle;
        s.index = k;
        return s;
    }
    k -= triangles;
    s.t = k < n ? 1 : -1;
    s.index = k % n;
    bool x_branch = rng.uniform() < x_branch_weight(params.theta[static_cast<size_t>(s.index)]);
    s.kind = x_branch ? SubtestKind::RThetaX : SubtestKind::RThetaZ;
    return s;
}

TestOutcome run_oneshot(const ProverSet &p, const TestParameters &params, Rng &rng) {
    if (p.size() != params.n()) {
        throw InvalidArgument("prover count does not match the graph");
    }
    TestOutcome out;
    out.subtest = sample_subtest(params, rng);
    QueryResult r = execute_query(p, subtest_query(params, out.subtest), rng);
    out.accepted = r.product == subtest_target(out.subtest);
    out.replies = std::move(r.replies);
    return out;
}

double c_test_vertex(double theta) { return 0.5 + 0.5 / (std::cos(theta) + std::abs(std::sin(theta))); }

double c_test(const TestParameters &params) {
    double sum = 0;
    for (double t : params.theta) {
        sum += 1 / (std::cos(t) + std::abs(std::sin(t)));
    }
    return (2.0 * params.n() + static_cast<double>(params.cover.triangles.size()) + sum) / params.n_g();
}

double s_test(const TestParameters &params, double delta) {
    if (!(delta >= 0)) {
        throw DomainError("s_test needs delta >= 0");
    }
    double n = params.n();
    return c_test(params) - std::pow(delta, 8) / (std::pow(10.0, 17.7) * std::pow(n, 11));
}

double subtest_pass_probability(const ProverSet &p, const TestParameters &params, const Subtest &s) {
    return query_pass_probability(p, subtest_query(params, s), subtest_target(s));
}

double rtheta_pass_probability(const ProverSet &p, const TestParameters &params, int v) {
    double wx = x_branch_weight(params.theta.at(static_cast<size_t>(v)));
    double total = 0;
    for (int t : {1, -1}) {
        total += wx * subtest_pass_probability(p, params, {SubtestKind::RThetaX, v, t});
        total += (1 - wx) * subtest_pass_probability(p, params, {SubtestKind::RThetaZ, v, t});
    }
    return total / 2;
}

double exact_pass_probability(const ProverSet &p, const TestParameters &params) {
    double total = 0;
    for (int v = 0; v < params.n(); v++) {
        total += subtest_pass_probability(p, params, {SubtestKind::Vertex, v, 1});
        total += 2 * rtheta_pass_probability(p, params, v);
    }
    for (size_t k = 0; k < params.cover.triangles.size(); k++) {
        total += subtest_pass_probability(p, params, {SubtestKind::Triangle, static_cast<int>(k), 1});
    }
    return total / params.n_g();
}

PassRate empirical_pass_rate(const ProverSet &p, const TestParameters &params, size_t trials, uint64_t seed,
                             int jobs) {
    if (trials < 1) {
        throw InvalidArgument("need at least one trial");
    }
    std::vector<char> accepted(trials, 0);
    parallel_for(trials, jobs, [&](size_t i) {
        Rng rng = Rng::stream(seed, i);
        accepted[i] = run_oneshot(p, params, rng).accepted ? 1 : 0;
    });
    PassRate r;
    r.trials = trials;
    for (char a : accepted) {
        r.accepted += static_cast<size_t>(a);
    }
    r.rate = static_cast<double>(r.accepted) / static_cast<double>(trials);
    r.std_error = std::sqrt(r.rate * (1 - r.rate) / static_cast<double>(trials));
    return r;
}

}  // namespace clusterproof
