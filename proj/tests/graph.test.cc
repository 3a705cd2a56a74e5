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

#include "clusterproof/graph.h"

#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "clusterproof/errors.h"
#include "test_util.h"

using namespace clusterproof;
using namespace clusterproof::testing;

namespace {

// Embed the lattice in the plane: odd rows shift right by 1/2, rows are
// sqrt(3)/2 apart. Edges of a triangular lattice are exactly the unit
// distance pairs.
std::set<Edge> unit_distance_pairs(int rows, int cols) {
    std::set<Edge> out;
    auto pos = [&](int v) {
        int r = v / cols, c = v % cols;
        return std::pair<double, double>{c + (r % 2 ? 0.5 : 0.0), r * std::sqrt(3.0) / 2};
    };
    for (int a = 0; a < rows * cols; a++) {
        for (int b = a + 1; b < rows * cols; b++) {
            auto [xa, ya] = pos(a);
            auto [xb, yb] = pos(b);
            if (std::abs(std::hypot(xa - xb, ya - yb) - 1) < 1e-9) {
                out.emplace(a, b);
            }
        }
    }
    return out;
}

}  // namespace

TEST(Graph, LatticeMatchesUnitDistanceEmbedding) {
    for (auto [rows, cols] : std::vector<std::pair<int, int>>{{3, 4}, {2, 5}, {4, 4}, {5, 3}}) {
        Graph g = triangular_lattice(rows, cols);
        auto expect = unit_distance_pairs(rows, cols);
        std::set<Edge> got(g.edges().begin(), g.edges().end());
        EXPECT_EQ(got, expect) << rows << "x" << cols;
    }
}

TEST(Graph, ThreeByFourLatticeHasTwentyThreeEdges) {
    EXPECT_EQ(triangular_lattice(3, 4).edge_count(), 23u);
}

TEST(Graph, StripAndComplete) {
    Graph s = triangle_strip(5);
    EXPECT_EQ(s.edge_count(), 7u);
    EXPECT_TRUE(s.adjacent(0, 2));
    EXPECT_FALSE(s.adjacent(0, 3));
    Graph k = complete_graph(4);
    EXPECT_EQ(k.edge_count(), 6u);
    EXPECT_EQ(k.max_degree(), 3);
}

TEST(Graph, RejectsBadEdges) {
    EXPECT_THROW(Graph(3, {{0, 0}}), InvalidArgument);
    EXPECT_THROW(Graph(3, {{0, 3}}), InvalidArgument);
    EXPECT_THROW(Graph(-1), InvalidArgument);
    Graph dup(3, {{0, 1}, {1, 0}});
    EXPECT_EQ(dup.edge_count(), 1u);
}

TEST(Graph, MultiplyMatchesAdjacencyLoop) {
    Rng rng(5);
    for (int trial = 0; trial < 50; trial++) {
        int n = 2 + static_cast<int>(rng.below(9));
        Graph g = random_graph(n, 0.4, rng);
        BitString x = BitString::from_mask(rng.next() & ((1u << n) - 1), static_cast<size_t>(n));
        BitString expect(static_cast<size_t>(n));
        for (int r = 0; r < n; r++) {
            int acc = 0;
            for (int c = 0; c < n; c++) {
                acc += g.adjacent(r, c) && x.get(static_cast<size_t>(c));
            }
            expect.set(static_cast<size_t>(r), acc % 2);
        }
        ASSERT_EQ(g.multiply(x), expect);
        ASSERT_EQ(neighborhood(g, 0), g.row(0));
    }
}

TEST(Graph, InducedEdgeCountObeysSplittingRule) {
    // (-1)^(e(x^y) + (x^y).Ay) == (-1)^e(x) where e counts induced edges,
    // i.e. e(x^y) + (x^y).Ay == e(x) (mod 2) whenever e(y) is folded in.
    Rng rng(9);
    for (int trial = 0; trial < 500; trial++) {
        int n = 2 + static_cast<int>(rng.below(10));
        Graph g = random_graph(n, 0.5, rng);
        uint64_t m = (uint64_t{1} << n) - 1;
        BitString x = BitString::from_mask(rng.next() & m, static_cast<size_t>(n));
        BitString y = BitString::from_mask(rng.next() & m, static_cast<size_t>(n));
        BitString xy = x ^ y;
        int lhs = induced_edge_count(g, xy) + dot(xy, g.multiply(y)) + induced_edge_count(g, y);
        ASSERT_EQ(lhs % 2, induced_edge_count(g, x) % 2);
    }
}

TEST(Graph, GreedyCoverIsValidAndLexicographic) {
    Graph g = triangular_lattice(3, 4);
    TriangleCover cover = triangle_cover(g);
    EXPECT_TRUE(is_valid_cover(g, cover));
    ASSERT_FALSE(cover.triangles.empty());
    EXPECT_EQ(cover.triangles.front().indices(), (std::vector<int>{0, 1, 4}));
    EXPECT_EQ(triangle_cover(complete_graph(3)).triangles.size(), 1u);
}

TEST(Graph, CoverRejectsTriangleFreeVertex) {
    Graph path(3, {{0, 1}, {1, 2}});
    try {
        triangle_cover(path);
        FAIL() << "expected UncoverableVertex";
    } catch (const UncoverableVertex &e) {
        EXPECT_EQ(e.vertex, 0);
    }
}

TEST(Graph, CoverInvariantsOnRandomGraphs) {
    Rng rng(21);
    for (int trial = 0; trial < 100; trial++) {
        Graph g = random_coverable(3 + static_cast<int>(rng.below(8)), rng);
        TriangleCover c = triangle_cover(g);
        ASSERT_TRUE(is_valid_cover(g, c));
        for (const auto &t : c.triangles) {
            auto v = t.indices();
            ASSERT_EQ(v.size(), 3u);
            ASSERT_TRUE(g.adjacent(v[0], v[1]) && g.adjacent(v[1], v[2]) && g.adjacent(v[0], v[2]));
        }
    }
}

TEST(Graph, LocalComplementIsAnInvolutionAndTogglesNeighbourhood) {
    Rng rng(33);
    for (int trial = 0; trial < 100; trial++) {
        int n = 2 + static_cast<int>(rng.below(8));
        Graph g = random_graph(n, 0.5, rng);
        int v = static_cast<int>(rng.below(static_cast<size_t>(n)));
        Graph h = local_complement(g, v);
        ASSERT_EQ(local_complement(h, v), g);
        for (int a = 0; a < n; a++) {
            for (int b = a + 1; b < n; b++) {
                bool inside = a != v && b != v && g.adjacent(a, v) && g.adjacent(b, v);
                ASSERT_EQ(h.adjacent(a, b), inside ? !g.adjacent(a, b) : g.adjacent(a, b));
            }
        }
    }
}

TEST(Graph, SingleVertexToggleRule) {
    // e(x) = e(x ^ 1_v) +- (x ^ 1_v).A1_v, with + when v is in x.
    Rng rng(10);
    for (int trial = 0; trial < 300; trial++) {
        int n = 2 + static_cast<int>(rng.below(10));
        Graph g = random_graph(n, 0.5, rng);
        BitString x = BitString::from_mask(rng.next() & ((uint64_t{1} << n) - 1), static_cast<size_t>(n));
        int v = static_cast<int>(rng.below(static_cast<size_t>(n)));
        BitString unit = BitString::unit(static_cast<size_t>(n), static_cast<size_t>(v));
        BitString z = x ^ unit;
        int cross = dot(z, g.multiply(unit));
        int sign = x.get(static_cast<size_t>(v)) ? 1 : -1;
        ASSERT_EQ(induced_edge_count(g, z) + sign * cross, induced_edge_count(g, x));
    }
}

TEST(Graph, SplittingRuleNeedsInternalEdgeTerm) {
    // Without the e(y) term the rule fails once y spans an odd number of
    // edges: x = y = {0, 1} on a single edge.
    Graph g(2, {{0, 1}});
    BitString x = BitString::from_string("11");
    BitString y = x;
    BitString z = x ^ y;
    int without = induced_edge_count(g, z) + dot(z, g.multiply(y));
    EXPECT_NE(without % 2, induced_edge_count(g, x) % 2);
    EXPECT_EQ((without + induced_edge_count(g, y)) % 2, induced_edge_count(g, x) % 2);
}
