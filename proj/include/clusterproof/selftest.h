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

#ifndef CLUSTERPROOF_SELFTEST_H
#define CLUSTERPROOF_SELFTEST_H

#include <string>
#include <vector>

#include "clusterproof/graph.h"
#include "clusterproof/provers.h"
#include "clusterproof/rng.h"

namespace clusterproof {

/// Graph, triangle cover, per-vertex angles, and the fixed reference
/// neighbour u(v) used by the Z branch of the rotated-basis subtest.
struct TestParameters {
    Graph graph;
    TriangleCover cover;
    std::vector<double> theta;
    std::vector<int> u_choice;

    /// Greedy cover and smallest-neighbour u(v).
    static TestParameters make(const Graph &g, std::vector<double> theta);

    int n() const { return graph.n(); }
    /// 3|V| + |T|.
    int n_g() const { return 3 * graph.n() + static_cast<int>(cover.triangles.size()); }
    void validate() const;
};

enum class SubtestKind { Vertex, Triangle, RThetaX, RThetaZ };

const char *subtest_name(SubtestKind kind);

struct Subtest {
    SubtestKind kind = SubtestKind::Vertex;
    /// Vertex for Vertex and RTheta subtests, cover index for Triangle.
    int index = 0;
    /// +-1 sign of the rotated-basis angle; 1 otherwise.
    int t = 1;

    std::string str() const;
};

/// The query sent for a subtest, and the product value that passes.
Query subtest_query(const TestParameters &params, const Subtest &s);
int subtest_target(const Subtest &s);

/// Draws a subtest: an integer k uniform below N_G selects VERTEX (k < |V|),
/// TRIANGLE (next |T| slots), or RTHETA (last 2|V| slots, t = +1 for the
/// first |V| of them); then the RTHETA branch is X with probability
/// cos(theta_v) / (cos(theta_v) + |sin(theta_v)|).
Subtest sample_subtest(const TestParameters &params, Rng &rng);

struct TestOutcome {
    Subtest subtest;
    bool accepted = false;
    std::vector<int> replies;
};

TestOutcome run_oneshot(const ProverSet &p, const TestParameters &params, Rng &rng);

/// Honest pass probability of the rotated-basis subtest at one vertex:
/// 1/2 + 1/(2 (cos theta + |sin theta|)).
double c_test_vertex(double theta);

/// (2|V| + |T| + sum_v 1/(cos theta_v + |sin theta_v|)) / N_G.
double c_test(const TestParameters &params);

/// c_test - delta^8 / (10^17.7 n^11).
double s_test(const TestParameters &params, double delta);

/// Exact pass probability of one subtest.
double subtest_pass_probability(const ProverSet &p, const TestParameters &params, const Subtest &s);

/// Exact pass probability of the rotated-basis subtest at v, averaged over
/// t and the X/Z branch coin.
double rtheta_pass_probability(const ProverSet &p, const TestParameters &params, int v);

/// Exact one-shot pass probability: the sampling-weighted sum over all
/// subtests.
double exact_pass_probability(const ProverSet &p, const TestParameters &params);

struct PassRate {
    size_t trials = 0;
    size_t accepted = 0;
    double rate = 0;
    double std_error = 0;
};

/// Runs `trials` one-shot tests, trial i using Rng::stream(seed, i).
PassRate empirical_pass_rate(const ProverSet &p, const TestParameters &params, size_t trials, uint64_t seed,
                             int jobs = 1);

}  // namespace clusterproof

#endif
