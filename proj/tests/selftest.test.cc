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
#include <map>

#include "clusterproof/errors.h"
#include "gtest/gtest.h"
#include "test_util.h"

using namespace clusterproof;
using namespace clusterproof::testing;

TEST(SelfTest, ParametersForTriangle) {
    TestParameters params = TestParameters::make(complete_graph(3), {M_PI / 4, M_PI / 4, M_PI / 4});
    EXPECT_EQ(params.n_g(), 10);
    EXPECT_EQ(params.cover.triangles.size(), 1u);
    EXPECT_EQ(params.u_choice, std::vector<int>({1, 0, 0}));
}

TEST(SelfTest, HonestRateForTriangleAtQuarterTurn) {
    TestParameters params = TestParameters::make(complete_graph(3), {M_PI / 4, M_PI / 4, M_PI / 4});
    double closed = (7 + 3 / std::sqrt(2.0)) / 10;
    EXPECT_NEAR(c_test(params), closed, 1e-15);
    EXPECT_NEAR(c_test(params), 0.91213, 5e-6);
    EXPECT_NEAR(exact_pass_probability(honest_provers(params.graph, params.theta), params), closed, 1e-12);
}

TEST(SelfTest, VertexRateFormula) {
    for (double t : {0.0, 0.2, M_PI / 4, 1.3, M_PI / 2}) {
        EXPECT_NEAR(c_test_vertex(t), 0.5 + 0.5 / (std::cos(t) + std::abs(std::sin(t))), 1e-15);
    }
    EXPECT_DOUBLE_EQ(c_test_vertex(0), 1.0);
}

TEST(SelfTest, HonestExactRateEqualsClosedFormOnRandomGraphs) {
    Rng rng(41);
    for (int rep = 0; rep < 20; rep++) {
        int n = 3 + static_cast<int>(rng.below(5));
        Graph g = random_coverable(n, rng);
        std::vector<double> theta;
        for (int v = 0; v < n; v++) theta.push_back(rng.uniform(0, M_PI / 2));
        TestParameters params = TestParameters::make(g, theta);
        ProverSet honest = honest_provers(g, theta);
        // Independent weighted sum: vertex and triangle subtests always pass;
        // the rotated-basis subtest passes with c_test_vertex.
        double sum = params.n() + static_cast<double>(params.cover.triangles.size());
        for (double t : theta) sum += 2 * c_test_vertex(t);
        ASSERT_NEAR(exact_pass_probability(honest, params), sum / params.n_g(), 1e-12);
        ASSERT_NEAR(c_test(params), sum / params.n_g(), 1e-12);
        for (int v = 0; v < n; v++) {
            ASSERT_NEAR(rtheta_pass_probability(honest, params, v), c_test_vertex(theta[v]), 1e-12);
        }
    }
}

TEST(SelfTest, SubtestFrequencies) {
    TestParameters params = TestParameters::make(triangle_strip(4), {0.3, 0.6, 0.9, 1.2});
    std::map<std::string, int> counts;
    Rng rng(42);
    const int trials = 200000;
    for (int i = 0; i < trials; i++) {
        Subtest s = sample_subtest(params, rng);
        counts[std::string(subtest_name(s.kind)) + ":" + std::to_string(s.index) + ":" + std::to_string(s.t)]++;
    }
    auto check = [&](const std::string &key, double p) {
        double sigma = std::sqrt(p * (1 - p) / trials);
        EXPECT_LT(std::abs(counts[key] / double(trials) - p), 4 * sigma) << key;
    };
    double ng = params.n_g();
    for (int v = 0; v < 4; v++) {
        check(std::string(subtest_name(SubtestKind::Vertex)) + ":" + std::to_string(v) + ":1", 1 / ng);
        double c = std::cos(params.theta[v]), s = std::abs(std::sin(params.theta[v]));
        for (int t : {1, -1}) {
            check(std::string(subtest_name(SubtestKind::RThetaX)) + ":" + std::to_string(v) + ":" + std::to_string(t),
                  c / (c + s) / ng);
            check(std::string(subtest_name(SubtestKind::RThetaZ)) + ":" + std::to_string(v) + ":" + std::to_string(t),
                  s / (c + s) / ng);
        }
    }
    for (size_t k = 0; k < params.cover.triangles.size(); k++) {
        check(std::string(subtest_name(SubtestKind::Triangle)) + ":" + std::to_string(k) + ":1", 1 / ng);
    }
}

TEST(SelfTest, EmpiricalRateMatchesExact) {
    Graph g = triangle_strip(5);
    std::vector<double> theta(5, 0.5);
    TestParameters params = TestParameters::make(g, theta);
    Rng prng(43);
    ProverSet p = perturbed_provers(honest_provers(g, theta), 0.3, prng);
    double exact = exact_pass_probability(p, params);
    PassRate r = empirical_pass_rate(p, params, 40000, 44);
    EXPECT_EQ(r.trials, 40000u);
    EXPECT_LT(std::abs(r.rate - exact), 4 * std::sqrt(exact * (1 - exact) / 40000));
    EXPECT_LT(exact, c_test(params));
}

TEST(SelfTest, EmpiricalRateIsJobInvariant) {
    TestParameters params = TestParameters::make(complete_graph(3), {M_PI / 4, M_PI / 4, M_PI / 4});
    ProverSet p = honest_provers(params.graph, params.theta);
    PassRate a = empirical_pass_rate(p, params, 5000, 7, 1);
    PassRate b = empirical_pass_rate(p, params, 5000, 7, 3);
    EXPECT_EQ(a.accepted, b.accepted);
}

TEST(SelfTest, SoundnessThreshold) {
    TestParameters params = TestParameters::make(complete_graph(3), {M_PI / 4, M_PI / 4, M_PI / 4});
    double delta = 0.1;
    EXPECT_NEAR(s_test(params, delta), c_test(params) - std::pow(delta, 8) / (std::pow(10.0, 17.7) * std::pow(3.0, 11)),
                1e-18);
    EXPECT_DOUBLE_EQ(s_test(params, 0.0), c_test(params));
    // Below delta ~ 1 the gap is under one ulp of c_test; compare where it resolves.
    EXPECT_LT(s_test(params, 200.0), s_test(params, 100.0));
    EXPECT_THROW(s_test(params, -0.1), DomainError);
}

TEST(SelfTest, RejectsInvalidParameters) {
    EXPECT_THROW(TestParameters::make(Graph(3, {{0, 1}, {1, 2}}), {0.1, 0.1, 0.1}), UncoverableVertex);
    EXPECT_THROW(TestParameters::make(complete_graph(3), {0.1, 0.1}), InvalidArgument);
}
