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

#include "clusterproof/mbqc.h"

#include <cmath>

#include "clusterproof/acceptance.h"
#include "clusterproof/errors.h"
#include "clusterproof/graphstate.h"
#include "gtest/gtest.h"
#include "test_util.h"

using namespace clusterproof;
using namespace clusterproof::testing;

namespace {

MeasurementPattern triangle_pattern() {
    MeasurementPattern pat;
    pat.steps = {{0, M_PI / 4, {}, {}}, {1, M_PI / 4, {0}, {}}, {2, M_PI / 4, {1}, {0}}};
    pat.output_bits = {1, 2};
    return pat;
}

// Brute-force output distribution for non-adaptive patterns: expand the
// full product of projectors with a dense operator and sum the Born weights.
std::array<double, 2> dense_nonadaptive(const Graph &g, const MeasurementPattern &pat) {
    int n = g.n();
    auto amps = amplitudes_of(build_graph_state(g).state);
    std::array<double, 2> out{0, 0};
    size_t k = pat.steps.size();
    for (uint64_t bits = 0; bits < (uint64_t{1} << k); bits++) {
        std::vector<Dense> singles(static_cast<size_t>(n));
        int parity = 0;
        for (size_t i = 0; i < k; i++) {
            int b = (bits >> i) & 1;
            Dense proj = dense_identity(2) + dense_xz(pat.steps[i].theta).scaled(b ? -1 : 1);
            singles[pat.steps[i].vertex] = proj.scaled(0.5);
            for (int o : pat.output_bits) {
                if (o == pat.steps[i].vertex) parity ^= b;
            }
        }
        out[parity] += dense_expectation(dense_product(n, singles), amps).real();
    }
    return out;
}

}  // namespace

TEST(Mbqc, TeleportChainIsExact) {
    Rng rng(51);
    for (int i = 0; i < 50; i++) {
        EXPECT_LT(teleport_chain_check(rng.uniform(-M_PI, M_PI), rng.uniform(-M_PI, M_PI)), 1e-12);
    }
}

TEST(Mbqc, ReferenceMatchesDenseOnNonAdaptivePatterns) {
    Rng rng(52);
    for (int rep = 0; rep < 20; rep++) {
        int n = 2 + static_cast<int>(rng.below(5));
        Graph g = random_graph(n, 0.5, rng);
        MeasurementPattern pat;
        for (int v = 0; v < n; v++) {
            if (rng.bernoulli(0.7)) pat.steps.push_back({v, rng.uniform(0, M_PI / 2), {}, {}});
        }
        if (pat.steps.empty()) pat.steps.push_back({0, 0.3, {}, {}});
        pat.output_bits = {pat.steps.back().vertex};
        if (pat.steps.size() > 1) pat.output_bits.push_back(pat.steps.front().vertex);
        auto want = dense_nonadaptive(g, pat);
        auto got = reference_run(g, pat);
        ASSERT_NEAR(got[0], want[0], 1e-12);
        ASSERT_NEAR(got[1], want[1], 1e-12);
    }
}

TEST(Mbqc, HonestProversReproduceReference) {
    Rng rng(53);
    for (int n = 3; n <= 7; n++) {
        for (int rep = 0; rep < 5; rep++) {
            Graph g = random_coverable(n, rng);
            std::vector<double> theta;
            for (int v = 0; v < n; v++) theta.push_back(rng.uniform(0, M_PI / 2));
            MeasurementPattern pat = random_pattern(g, theta, rng);
            auto honest = pattern_distribution(honest_provers(g, theta), pat);
            auto ref = reference_run(g, pat);
            ASSERT_NEAR(honest[1], ref[1], 1e-10);
            ASSERT_NEAR(honest[0] + honest[1], 1, 1e-10);
        }
    }
}

TEST(Mbqc, TriangleDemoProbability) {
    Graph g = complete_graph(3);
    auto ref = reference_run(g, triangle_pattern());
    EXPECT_NEAR(ref[1], 0.6768, 5e-5);
}

TEST(Mbqc, SampledOutputsFollowDistribution) {
    Graph g = complete_graph(3);
    std::vector<double> theta(3, M_PI / 4);
    ProverSet p = honest_provers(g, theta);
    MeasurementPattern pat = triangle_pattern();
    double p1 = pattern_distribution(p, pat)[1];
    Rng rng(54);
    const int trials = 40000;
    int ones = 0;
    for (int i = 0; i < trials; i++) {
        RunResult r = run_pattern(p, pat, rng);
        ASSERT_EQ(r.transcript.size(), 3u);
        ones += r.output;
    }
    EXPECT_LT(std::abs(ones / double(trials) - p1), 4 * std::sqrt(p1 * (1 - p1) / trials));
}

TEST(Mbqc, AngleSupportIsEnforced) {
    Graph g = complete_graph(3);
    ProverSet p = honest_provers(g, {0.2, 0.2, 0.2});
    Rng rng(55);
    EXPECT_THROW(run_pattern(p, triangle_pattern(), rng), InvalidArgument);
}

TEST(Mbqc, PatternValidation) {
    MeasurementPattern pat = triangle_pattern();
    EXPECT_NO_THROW(pat.validate(3));
    EXPECT_THROW(pat.validate(2), InvalidArgument);
    MeasurementPattern twice = pat;
    twice.steps.push_back({0, 0.1, {}, {}});
    EXPECT_THROW(twice.validate(3), InvalidArgument);
    MeasurementPattern forward = pat;
    forward.steps[0].x_deps = {2};
    EXPECT_THROW(forward.validate(3), InvalidArgument);
    MeasurementPattern unmeasured = pat;
    unmeasured.output_bits = {5};
    EXPECT_THROW(unmeasured.validate(6), InvalidArgument);
    MeasurementPattern angle = pat;
    angle.steps[1].theta = 2.0;
    EXPECT_THROW(angle.validate(3), InvalidArgument);
}

TEST(Mbqc, PatternLabelsAreRotations) {
    auto labels = pattern_labels(4, triangle_pattern());
    ASSERT_EQ(labels.size(), 4u);
    // A step without X dependencies is always measured with +theta.
    EXPECT_EQ(labels[0], std::vector<QueryLabel>({QueryLabel::RPlus}));
    EXPECT_EQ(labels[1], std::vector<QueryLabel>({QueryLabel::RPlus, QueryLabel::RMinus}));
    EXPECT_TRUE(labels[3].empty());
}
