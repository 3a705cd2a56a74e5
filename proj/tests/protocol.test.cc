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

#include "clusterproof/protocol.h"

#include <cmath>

#include "clusterproof/bounds.h"
#include "clusterproof/errors.h"
#include "gtest/gtest.h"

using namespace clusterproof;

namespace {

ProtocolConfig triangle_config(double q) {
    ProtocolConfig cfg;
    cfg.q = q;
    cfg.params = TestParameters::make(complete_graph(3), {M_PI / 4, M_PI / 4, M_PI / 4});
    cfg.pattern.steps = {{0, M_PI / 4, {}, {}}, {1, M_PI / 4, {0}, {}}, {2, M_PI / 4, {1}, {0}}};
    cfg.pattern.output_bits = {1, 2};
    return cfg;
}

RoundFn bernoulli_round(double p) {
    return [p](Rng &rng) {
        RoundRecord r;
        r.accepted = rng.bernoulli(p);
        return r;
    };
}

}  // namespace

TEST(Protocol, ExactRoundProbabilityMixesBranches) {
    ProtocolConfig cfg = triangle_config(0.3);
    ProverSet p = honest_provers(cfg.params.graph, cfg.params.theta);
    double calc = pattern_distribution(p, cfg.pattern)[1];
    double test = exact_pass_probability(p, cfg.params);
    EXPECT_NEAR(round_accept_probability(p, cfg), 0.3 * calc + 0.7 * test, 1e-15);
    cfg.q = 1;
    EXPECT_NEAR(round_accept_probability(p, cfg), calc, 1e-15);
    cfg.q = 0;
    EXPECT_NEAR(round_accept_probability(p, cfg), test, 1e-15);
}

TEST(Protocol, HonestCompositeRateMatchesExact) {
    ProtocolConfig cfg = triangle_config(0.4);
    cfg.rounds = 100000;
    ProverSet p = honest_provers(cfg.params.graph, cfg.params.theta);
    double want = round_accept_probability(p, cfg);
    ProtocolResult r = run_amplified(p, cfg, 71, 2);
    ASSERT_EQ(r.rounds.size(), 100000u);
    double rate = r.accept_count / 1e5;
    EXPECT_LT(std::abs(rate - want), 4 * std::sqrt(want * (1 - want) / 1e5));
    size_t calc = 0;
    for (const auto &round : r.rounds) calc += round.branch == Branch::Calculate;
    EXPECT_LT(std::abs(calc / 1e5 - 0.4), 4 * std::sqrt(0.24 / 1e5));
}

TEST(Protocol, DeterministicAndJobInvariant) {
    ProtocolConfig cfg = triangle_config(0.5);
    cfg.rounds = 500;
    cfg.threshold = 400;
    ProverSet p = honest_provers(cfg.params.graph, cfg.params.theta);
    ProtocolResult a = run_amplified(p, cfg, 5, 1);
    ProtocolResult b = run_amplified(p, cfg, 5, 3);
    ASSERT_EQ(a.accept_count, b.accept_count);
    for (size_t i = 0; i < a.rounds.size(); i++) {
        ASSERT_EQ(a.rounds[i].accepted, b.rounds[i].accepted);
        ASSERT_EQ(a.rounds[i].branch, b.rounds[i].branch);
    }
    EXPECT_EQ(a.accepted, a.accept_count > 400);
}

TEST(Protocol, SingleRoundWithZeroThreshold) {
    ProtocolResult accept = run_amplified(bernoulli_round(1.0), 1, 0, 1);
    EXPECT_TRUE(accept.accepted);
    ProtocolResult reject = run_amplified(bernoulli_round(0.0), 1, 0, 1);
    EXPECT_FALSE(reject.accepted);
}

TEST(Protocol, MidpointThresholdSeparatesAtHoeffdingCount) {
    double c = 0.6, s = 0.4;
    long long n = hoeffding_repetitions(c - s, 1.0 / 3);
    ASSERT_EQ(n, 55);
    double threshold = ProtocolConfig::midpoint_threshold(n, c, s);
    EXPECT_DOUBLE_EQ(threshold, 27.5);
    int wrong_honest = 0, wrong_cheat = 0;
    const int meta = 1000;
    for (int m = 0; m < meta; m++) {
        wrong_honest += !run_amplified(bernoulli_round(c), n, threshold, 1000 + m).accepted;
        wrong_cheat += run_amplified(bernoulli_round(s), n, threshold, 5000 + m).accepted;
    }
    double hoeffding = std::exp(-n * (c - s) * (c - s) / 2);
    EXPECT_LE(wrong_honest / double(meta), hoeffding);
    EXPECT_LE(wrong_cheat / double(meta), hoeffding);
}

TEST(Protocol, HalfGapThresholdAcceptsCheaters) {
    // N (c - s) / 2 sits far below the cheater's mean count N s, so it only
    // separates the two cases when s is near zero.
    double c = 0.6, s = 0.4;
    long long n = 55;
    double half_gap = n * (c - s) / 2;
    int cheat_accepts = 0;
    for (int m = 0; m < 200; m++) {
        cheat_accepts += run_amplified(bernoulli_round(s), n, half_gap, 9000 + m).accepted;
    }
    EXPECT_GT(cheat_accepts, 190);
}

TEST(Protocol, CalculationQueriesAppearInTheTest) {
    ProtocolConfig cfg = triangle_config(0.5);
    EXPECT_TRUE(calculation_labels_covered(cfg.params, cfg.pattern));
    auto labels = test_labels(cfg.params);
    ASSERT_EQ(labels.size(), 3u);
    for (const auto &per_vertex : labels) {
        EXPECT_EQ(per_vertex.size(), 4u);
    }
    MeasurementPattern off = cfg.pattern;
    off.steps[1].theta = 0.3;
    EXPECT_FALSE(calculation_labels_covered(cfg.params, off));
}

TEST(Protocol, RoundBranchesFollowCoin) {
    ProtocolConfig cfg = triangle_config(1.0);
    ProverSet p = honest_provers(cfg.params.graph, cfg.params.theta);
    Rng rng(72);
    for (int i = 0; i < 20; i++) {
        RoundRecord r = run_round(p, cfg, rng);
        EXPECT_EQ(r.branch, Branch::Calculate);
        EXPECT_EQ(r.accepted, r.output == 1);
    }
    cfg.q = 0;
    for (int i = 0; i < 20; i++) {
        EXPECT_EQ(run_round(p, cfg, rng).branch, Branch::Test);
    }
}
