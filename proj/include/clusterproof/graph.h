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

#ifndef CLUSTERPROOF_GRAPH_H
#define CLUSTERPROOF_GRAPH_H

#include <utility>
#include <vector>

#include "clusterproof/bits.h"

namespace clusterproof {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1.
///
/// The adjacency matrix (rows as BitStrings, used for GF(2) products) and the
/// sorted edge list (u < v) are both stored and checked against each other
/// when the graph is built.
class Graph {
   public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, const std::vector<Edge> &edges);

    int n() const { return n_; }
    const std::vector<Edge> &edges() const { return edges_; }
    size_t edge_count() const { return edges_.size(); }
    bool adjacent(int u, int v) const;
    int degree(int v) const;
    int max_degree() const;
    const BitString &row(int v) const;

    /// A x over GF(2).
    BitString multiply(const BitString &x) const;

    bool operator==(const Graph &other) const { return n_ == other.n_ && edges_ == other.edges_; }

   private:
    void check_vertex(int v) const;
    void validate() const;

    int n_ = 0;
    std::vector<BitString> adjacency_;
    std::vector<Edge> edges_;
};

/// Characteristic vector of the neighbourhood of v, i.e. A 1_v.
BitString neighborhood(const Graph &g, int v);

/// (x . A x) / 2 over Z: the number of edges of the subgraph induced on x.
int induced_edge_count(const Graph &g, const BitString &x);

/// Triangular lattice in the brick layout: rows of `cols` vertices, vertex
/// (r, c) has index r * cols + c. Each row is a path. Between consecutive
/// rows, the vertex (o, c) of the odd row is joined to (e, c) and (e, c + 1)
/// of the even row. Embedded with odd rows shifted right by half a unit,
/// every edge has unit length and every face is a triangle.
Graph triangular_lattice(int rows, int cols);

/// Triangulated strip 0-1-2-...: edges (i, i+1) and (i, i+2).
Graph triangle_strip(int n);

Graph complete_graph(int n);

/// Triangles stored as indicator strings with exactly three set bits.
struct TriangleCover {
    std::vector<BitString> triangles;
};

/// True iff the cover has valid triangles of g and covers every vertex.
bool is_valid_cover(const Graph &g, const TriangleCover &cover);

/// Greedy cover: scan vertices in ascending order; for each uncovered vertex
/// add the lexicographically smallest triangle (sorted vertex triple) that
/// contains it. Throws UncoverableVertex when some vertex is in no triangle.
TriangleCover triangle_cover(const Graph &g);

/// Toggles every edge between two neighbours of v.
Graph local_complement(const Graph &g, int v);

}  // namespace clusterproof

#endif
