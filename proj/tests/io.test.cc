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

#include "clusterproof/io.h"

#include <cmath>
#include <fstream>

#include "clusterproof/errors.h"
#include "gtest/gtest.h"

using namespace clusterproof;

TEST(Io, GraphForms) {
    Graph k3 = graph_from_json(Json::parse(R"({"n": 3, "edges": [[0, 1], [1, 2], [0, 2]]})"));
    EXPECT_EQ(k3, complete_graph(3));
    EXPECT_EQ(graph_from_json(Json::parse(R"({"lattice": [3, 4]})")), triangular_lattice(3, 4));
    EXPECT_EQ(graph_from_json(Json::parse(R"({"strip": 5})")), triangle_strip(5));
    EXPECT_EQ(graph_from_json(Json::parse(R"({"complete": 4})")), complete_graph(4));
    EXPECT_EQ(graph_from_json(graph_to_json(triangular_lattice(2, 3))), triangular_lattice(2, 3));
    EXPECT_THROW(graph_from_json(Json::parse(R"({"n": 2, "edges": [[0, 2]]})")), InvalidArgument);
    EXPECT_THROW(graph_from_json(Json::parse(R"({"tree": 3})")), InvalidArgument);
}

TEST(Io, GraphSpecs) {
    EXPECT_EQ(graph_from_spec("k3"), complete_graph(3));
    EXPECT_EQ(graph_from_spec("complete:5"), complete_graph(5));
    EXPECT_EQ(graph_from_spec("strip:6"), triangle_strip(6));
    EXPECT_EQ(graph_from_spec("lattice:3x4"), triangular_lattice(3, 4));
    EXPECT_EQ(graph_from_spec(std::string(CLUSTERPROOF_DATA_DIR) + "/lattice_3x4.json"), triangular_lattice(3, 4));
    EXPECT_THROW(graph_from_spec("lattice:3"), InvalidArgument);
    EXPECT_THROW(graph_from_spec("/no/such/graph.json"), InvalidArgument);
}

TEST(Io, ThetaForms) {
    EXPECT_EQ(theta_from_json(0.5, 3), std::vector<double>({0.5, 0.5, 0.5}));
    EXPECT_EQ(theta_from_json(Json::parse("[0.1, 0.2]"), 2), std::vector<double>({0.1, 0.2}));
    EXPECT_EQ(theta_from_json(Json::parse(R"({"default": 0.3, "1": 0.9})"), 3), std::vector<double>({0.3, 0.9, 0.3}));
    EXPECT_THROW(theta_from_json(Json::parse("[0.1]"), 2), InvalidArgument);
    EXPECT_THROW(theta_from_json(Json::parse(R"({"7": 0.1})"), 3), InvalidArgument);
}

TEST(Io, StrategyForms) {
    Graph g = complete_graph(3);
    std::vector<double> theta(3, M_PI / 4);
    EXPECT_TRUE(provers_from_json(Json::parse(R"({"kind": "honest"})"), g, theta).quantum());
    ProverSet pert = provers_from_json(Json::parse(R"({"kind": "perturbed", "eta": 0.05, "seed": 3})"), g, theta);
    ProverSet again = provers_from_json(Json::parse(R"({"kind": "perturbed", "eta": 0.05, "seed": 3})"), g, theta);
    EXPECT_EQ(pert.responder(1).observables[2].max_abs_diff(again.responder(1).observables[2]), 0);
    ProverSet cl = provers_from_json(
        Json::parse(R"({"kind": "classical", "table": [[1, 1, 1, 1], [1, -1, 1, -1], [-1, 1, 1, 1]]})"), g, theta);
    EXPECT_FALSE(cl.quantum());
    ProverSet xz = provers_from_json(
        Json::parse(R"({"kind": "xz-plane", "angles": [[0, 1.5707963267948966, 0.7853981633974483, -0.7853981633974483],
                       [0, 1.5707963267948966, 0.7853981633974483, -0.7853981633974483],
                       [0, 1.5707963267948966, 0.7853981633974483, -0.7853981633974483]], "state": "graph"})"),
        g, theta);
    EXPECT_TRUE(xz.quantum());
    EXPECT_THROW(provers_from_json(Json::parse(R"({"kind": "oracle"})"), g, theta), InvalidArgument);
    EXPECT_THROW(provers_from_json(Json::parse(R"({"kind": "classical", "table": [[1, 1, 1, 1]]})"), g, theta),
                 InvalidArgument);
}

TEST(Io, PatternRoundTrip) {
    MeasurementPattern pat = pattern_from_json(read_json_file(std::string(CLUSTERPROOF_DATA_DIR) + "/pattern_k3.json"));
    ASSERT_EQ(pat.steps.size(), 3u);
    EXPECT_EQ(pat.steps[2].x_deps, std::vector<int>({1}));
    EXPECT_EQ(pat.steps[2].z_deps, std::vector<int>({0}));
    MeasurementPattern back = pattern_from_json(pattern_to_json(pat));
    EXPECT_EQ(pattern_to_json(back), pattern_to_json(pat));
    EXPECT_THROW(pattern_from_json(Json::parse(R"({"steps": [{"theta": 0.1}]})")), InvalidArgument);
}

TEST(Io, Labels) {
    EXPECT_EQ(label_from_json("I", 3).str(), "I");
    EXPECT_EQ(label_from_json("R+:2", 3).str(), "R+:2");
    ObservableLabel prod = label_from_json(Json::parse(R"({"x": [0, 2], "z": [1]})"), 3);
    EXPECT_EQ(prod.kind, ObservableLabel::Kind::Product);
    EXPECT_EQ(prod.q, BitString::from_string("101"));
    EXPECT_EQ(prod.p, BitString::from_string("010"));
    EXPECT_EQ(labels_from_json(Json::parse(R"(["X:0", "Z:1"])"), 2).size(), 2u);
    EXPECT_THROW(label_from_json("X:3", 3), InvalidArgument);
    EXPECT_THROW(label_from_json("Q:0", 3), InvalidArgument);
}

TEST(Io, FileErrorsNameThePath) {
    try {
        read_json_file("/no/such/file.json");
        FAIL();
    } catch (const InvalidArgument &e) {
        EXPECT_NE(std::string(e.what()).find("/no/such/file.json"), std::string::npos);
    }
    std::string bad = ::testing::TempDir() + "bad.json";
    std::ofstream(bad) << "{not json";
    EXPECT_THROW(read_json_file(bad), InvalidArgument);
}
