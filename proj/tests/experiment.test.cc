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

#include "clusterproof/experiment.h"

#include <cmath>
#include <sstream>

#include "clusterproof/errors.h"
#include "gtest/gtest.h"

using namespace clusterproof;

namespace {

std::string data(const std::string &name) { return std::string(CLUSTERPROOF_DATA_DIR) + "/" + name; }

ExperimentConfig selftest_config(size_t trials, uint64_t seed) {
    ExperimentConfig cfg;
    cfg.kind = ExperimentKind::SelfTest;
    cfg.trials = trials;
    cfg.seed = seed;
    return cfg;
}

}  // namespace

TEST(Experiment, HonestTriangleRate) {
    ResultRecord rec = run_experiment(selftest_config(100000, 7));
    double rate = rec.summary["rate"].get<double>();
    double c = (7 + 3 / std::sqrt(2.0)) / 10;
    EXPECT_LT(std::abs(rate - c), 4 * std::sqrt(c * (1 - c) / 1e5));
    EXPECT_EQ(rec.rows.size(), 100000u);
    EXPECT_NEAR(rec.summary["c_test"].get<double>(), c, 1e-12);
    EXPECT_EQ(rec.summary["prng"].get<std::string>(), kPrngFamily);
}

TEST(Experiment, RerunsAreByteIdentical) {
    ExperimentConfig cfg = selftest_config(2000, 9);
    std::string a = run_experiment(cfg).jsonl();
    cfg.jobs = 3;
    std::string b = run_experiment(cfg).jsonl();
    EXPECT_EQ(a, b);
    cfg.seed = 10;
    EXPECT_NE(run_experiment(cfg).jsonl(), a);
}

TEST(Experiment, JsonlRoundTripAndRecomputedSummary) {
    ResultRecord rec = run_experiment(selftest_config(500, 3));
    ResultRecord back = ResultRecord::parse_jsonl(rec.jsonl());
    EXPECT_TRUE(back == rec);
    EXPECT_DOUBLE_EQ(recompute_rate(back.rows), back.summary["rate"].get<double>());
    size_t accepted = 0;
    for (const auto &r : back.rows) accepted += r["accepted"].get<bool>();
    EXPECT_EQ(accepted, back.summary["accepted"].get<size_t>());
    EXPECT_EQ(back.digest, selftest_config(500, 3).digest());
}

TEST(Experiment, CsvHasHeaderAndOneLinePerRow) {
    ResultRecord rec = run_experiment(selftest_config(10, 1));
    std::ostringstream out;
    rec.write_csv(out);
    std::string text = out.str();
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 11);
    EXPECT_EQ(text.rfind("trial", 0), 0u);
}

TEST(Experiment, ConfigJsonRoundTrip) {
    ExperimentConfig cfg = ExperimentConfig::from_json(read_json_file(data("config_protocol.json")));
    EXPECT_EQ(cfg.kind, ExperimentKind::Protocol);
    ExperimentConfig back = ExperimentConfig::from_json(cfg.to_json());
    EXPECT_EQ(back.digest(), cfg.digest());
    EXPECT_THROW(ExperimentConfig::from_json(Json::parse(R"({"kind": "selftest", "sead": 3})")), InvalidArgument);
    EXPECT_THROW(ExperimentConfig::from_json(Json::parse(R"({"kind": "magic"})")), InvalidArgument);
}

TEST(Experiment, ValidationNamesTheMissingPiece) {
    ExperimentConfig cfg;
    cfg.trials = 10;
    try {
        cfg.validate();
        FAIL();
    } catch (const InvalidArgument &e) {
        EXPECT_NE(std::string(e.what()).find("seed"), std::string::npos);
    }
    cfg.seed = 1;
    cfg.graph = "/no/such/graph.json";
    EXPECT_THROW(cfg.validate(), InvalidArgument);
    ExperimentConfig mb;
    mb.kind = ExperimentKind::Mbqc;
    mb.trials = 5;
    mb.seed = 1;
    EXPECT_THROW(mb.validate(), InvalidArgument);
    ExperimentConfig pr;
    pr.kind = ExperimentKind::Protocol;
    pr.trials = 5;
    pr.seed = 1;
    pr.pattern = data("pattern_k3.json");
    EXPECT_THROW(pr.validate(), InvalidArgument);
    pr.delta = 0.5;
    EXPECT_THROW(pr.validate(), InvalidArgument);
    pr.delta = 0.1;
    EXPECT_NO_THROW(pr.validate());
}

TEST(Experiment, MbqcRateMatchesReference) {
    ExperimentConfig cfg;
    cfg.kind = ExperimentKind::Mbqc;
    cfg.pattern = data("pattern_k3.json");
    cfg.trials = 20000;
    cfg.seed = 4;
    ResultRecord rec = run_experiment(cfg);
    double p1 = 0.6768;
    EXPECT_LT(std::abs(rec.summary["rate"].get<double>() - p1), 4 * std::sqrt(p1 * (1 - p1) / 20000));
}

TEST(Experiment, ProtocolSeparatesHonestFromClassical) {
    ExperimentConfig cfg = ExperimentConfig::from_json(read_json_file(data("config_protocol.json")));
    cfg.pattern = data("pattern_k3.json");
    ResultRecord honest = run_experiment(cfg);
    EXPECT_EQ(honest.summary["decision"].get<std::string>(), "accept");
    EXPECT_TRUE(honest.summary["calculation_labels_covered"].get<bool>());
    cfg.strategy = read_json_file(data("strategy_classical.json"));
    ResultRecord classical = run_experiment(cfg);
    EXPECT_EQ(classical.summary["decision"].get<std::string>(), "reject");
}

TEST(Experiment, IsometryAndBoundsRunWithoutSeed) {
    ExperimentConfig iso;
    iso.kind = ExperimentKind::Isometry;
    ResultRecord r = run_experiment(iso);
    EXPECT_TRUE(r.summary["all_satisfied"].get<bool>());
    ExperimentConfig b;
    b.kind = ExperimentKind::Bounds;
    ResultRecord table = run_experiment(b);
    EXPECT_EQ(table.summary["trials"].get<size_t>(), 0u);
    EXPECT_FALSE(table.rows.empty());
}
