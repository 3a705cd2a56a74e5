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

#include "clusterproof/bounds.h"

#include <cmath>

#include "clusterproof/errors.h"
#include "gtest/gtest.h"

using namespace clusterproof;

namespace {

double eval(BoundKind kind, std::map<std::string, double> params) {
    BoundRequest req;
    req.kind = kind;
    req.params = std::move(params);
    return evaluate(req).value;
}

}  // namespace

TEST(Bounds, NamesAndAliasesParse) {
    for (BoundKind k : all_bound_kinds()) {
        EXPECT_EQ(parse_bound_kind(bound_name(k)), k);
    }
    EXPECT_EQ(all_bound_kinds().size(), 16u);
    EXPECT_EQ(parse_bound_kind("thm2"), BoundKind::GraphTest);
    EXPECT_EQ(parse_bound_kind("Lemma6_Q"), BoundKind::MixQ);
    EXPECT_EQ(parse_bound_kind("HOEFFDING-N"), BoundKind::Repetitions);
    EXPECT_THROW(parse_bound_kind("lemma99"), InvalidArgument);
}

TEST(Bounds, ClosedFormsByDirectArithmetic) {
    double eps = 1e-6, delta = 1e-3;
    EXPECT_DOUBLE_EQ(eval(BoundKind::GraphTest, {{"pp", 2}, {"n", 12}, {"edges", 23}, {"eps", eps}}),
                     (2 * std::sqrt(2.0) + 2 * std::sqrt(24.0) + std::sqrt(35.0)) * std::pow(2 * eps, 0.25));
    EXPECT_DOUBLE_EQ(eval(BoundKind::Anticommute, {{"eps", eps}}), 4 * std::sqrt(2 * eps));
    EXPECT_DOUBLE_EQ(eval(BoundKind::ProductAnticommute, {{"st", 3}, {"eps", eps}}), 12 * std::sqrt(2 * eps));
    EXPECT_DOUBLE_EQ(eval(BoundKind::StabilizerProduct, {{"tAt", 2}, {"tt", 3}, {"eps", eps}}), 7 * std::sqrt(2 * eps));
    EXPECT_DOUBLE_EQ(eval(BoundKind::Rotation, {{"eps", eps}, {"delta", delta}}), std::sqrt(2 * (eps + 2 * delta)));
    EXPECT_DOUBLE_EQ(eval(BoundKind::AdaptiveState, {{"n", 12}, {"m", 4}, {"delta", delta}}), 97 * delta);
    EXPECT_DOUBLE_EQ(eval(BoundKind::AdaptiveProbability, {{"n", 12}, {"delta", delta}}), 194 * delta);
    double inner = 0.01 / (22 + 25 * std::sqrt(12.0));
    double eps4 = std::pow(inner, 4);
    EXPECT_NEAR(eval(BoundKind::TestEps, {{"n", 12}, {"delta", 0.1}}), eps4, 1e-13 * eps4);
    EXPECT_NEAR(eval(BoundKind::TestDelta, {{"n", 12}, {"eps", std::pow(inner, 4)}}), 0.1, 1e-12);
    EXPECT_NEAR(eval(BoundKind::TestGap, {{"n", 12}, {"delta", 0.1}, {"N_G", 40}}), eps4 / 80, 1e-13 * eps4);
    double sound = 1e-8 / (std::pow(10.0, 17.7) * std::pow(12.0, 11));
    EXPECT_NEAR(eval(BoundKind::SoundnessGap, {{"n", 12}, {"delta", 0.1}}), sound, 1e-13 * sound);
    double mix = 1e-8 / (std::pow(10.0, 18.8) * std::pow(12.0, 11));
    EXPECT_NEAR(eval(BoundKind::MixGap, {{"n", 12}, {"delta", 0.1}}), mix, 1e-13 * mix);
}

TEST(Bounds, BitStringsStandInForDots) {
    BoundRequest req;
    req.kind = BoundKind::ProductAnticommute;
    req.set("eps", 0.01);
    req.bits["s"] = BitString::from_string("1101");
    req.bits["t"] = BitString::from_string("0111");
    EXPECT_DOUBLE_EQ(evaluate(req).value, 4 * 2 * std::sqrt(0.02));
}

TEST(Bounds, MixingChoice) {
    QChoice c = choose_q(0.9, 0.8, 1.0 / 3, 1.0 / 6);
    EXPECT_NEAR(c.q, 0.1 / 0.6, 1e-15);
    // Provers either fail the test often enough to fake any computation, or
    // stay within delta of ideal; the two ceilings cross at this q.
    double q = c.q, ct = 0.9, st = 0.8, sc = 1.0 / 3, cc = 2.0 / 3, d = 1.0 / 6;
    double honest = q * cc + (1 - q) * ct;
    double far = q + (1 - q) * st;
    double near = q * (sc + d) + (1 - q) * ct;
    EXPECT_NEAR(far, near, 1e-15);
    EXPECT_NEAR(c.gap, honest - near, 1e-15);
    EXPECT_NEAR(c.gap, (cc - sc - d) * (ct - st) / (1 + ct - sc - st - d), 1e-15);
    QChoice via_gap = choose_q_from_test_gap(0.1, 1.0 / 3, 1.0 / 6);
    EXPECT_NEAR(via_gap.q, c.q, 1e-15);
    EXPECT_NEAR(via_gap.gap, c.gap, 1e-15);
    EXPECT_THROW(choose_q(0.8, 0.9, 1.0 / 3, 0.1), DomainError);
    EXPECT_THROW(choose_q(0.9, 0.8, 1.0 / 3, 0.2), DomainError);
    EXPECT_THROW(choose_q(0.9, 0.8, 1.0 / 3, 0.0), DomainError);
}

TEST(Bounds, ExactMixGapExceedsClosedFormBound) {
    for (int n : {3, 12, 100}) {
        for (double delta : {0.01, 0.1, 1.0 / 6}) {
            double test_gap = soundness_gap(n, delta);
            QChoice c = choose_q_from_test_gap(test_gap, 1.0 / 3, delta);
            EXPECT_GE(c.gap, mix_gap_bound(n, delta)) << n << " " << delta;
        }
    }
}

TEST(Bounds, RepetitionCounts) {
    EXPECT_EQ(hoeffding_repetitions(0.2, 1.0 / 3), 55);
    EXPECT_EQ(hoeffding_repetitions(1.0, 1.0 / 3), 3);
    EXPECT_EQ(hoeffding_repetitions(0.5, 0.01), static_cast<long long>(std::ceil(2 * std::log(100.0) / 0.25)));
    EXPECT_THROW(hoeffding_repetitions(0, 0.3), DomainError);
    EXPECT_THROW(hoeffding_repetitions(1.5, 0.3), DomainError);
    EXPECT_THROW(hoeffding_repetitions(0.2, 1), DomainError);
}

TEST(Bounds, PublishedConstantsFollowFromComposition) {
    // 8 (4 * 81 * 47)^4 bounds the soundness denominator: 10^17.63 <= 10^17.7.
    EXPECT_NEAR(std::log10(chain_constant()), 17.63, 0.005);
    EXPECT_LE(std::log10(chain_constant()), 17.7);
    // 2 ln 3 / (delta^8 / (10^18.8 n^11))^2 = 10^37.94 n^22 / delta^16.
    double composed = std::log10(2 * std::log(3.0)) + 2 * 18.8;
    EXPECT_NEAR(composed, 37.94, 0.005);
    EXPECT_LT(std::abs(composed - 37.9), 0.2);
    for (int n : {3, 12}) {
        for (double delta : {0.05, 0.1}) {
            double from_gap = std::log10(2 * std::log(3.0)) - 2 * std::log10(mix_gap_bound(n, delta));
            EXPECT_LT(std::abs(from_gap - total_log10_repetitions(n, delta)), 0.2);
        }
    }
}

TEST(Bounds, ChainFeedsEachStageIntoTheNext) {
    auto chain = bound_chain_report(12, 23, 1e-20);
    ASSERT_EQ(chain.size(), 5u);
    EXPECT_EQ(chain[0].name, "graph-test");
    EXPECT_DOUBLE_EQ(chain[0].value, graph_test_bound(1, 12, 23, 1e-20));
    EXPECT_DOUBLE_EQ(chain[1].value, std::sqrt(2 * (1e-20 + 2 * chain[0].value)));
    EXPECT_DOUBLE_EQ(chain[2].value, 97 * chain[1].value);
    EXPECT_DOUBLE_EQ(chain[3].value, 194 * chain[1].value);
    EXPECT_DOUBLE_EQ(chain[4].value, soundness_gap(12, chain[3].value));
}

TEST(Bounds, Errors) {
    EXPECT_THROW(eval(BoundKind::Anticommute, {}), MissingParameter);
    EXPECT_THROW(eval(BoundKind::Anticommute, {{"eps", -1}}), DomainError);
    EXPECT_THROW(eval(BoundKind::GraphTest, {{"pp", 1}, {"n", 0}, {"edges", 1}, {"eps", 0.1}}), DomainError);
    EXPECT_THROW(eval(BoundKind::TotalRepetitions, {{"n", 3}, {"delta", 0}}), DomainError);
    EXPECT_THROW(bound_chain_report(0, 1, 0.1), InvalidArgument);
}
