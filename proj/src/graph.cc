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

#include <algorithm>
#include <array>
#include <string>

#include "clusterproof/errors.h"

namespace clusterproof {

Graph::Graph(int n) : Graph(n, {}) {}

Graph::Graph(int n, const std::vector<Edge> &edges) : n_(n) {
    if (n < 0) {
        throw InvalidArgument("graph vertex count must be nonnegative");
    }
    adjacency_.assign(static_cast<size_t>(n), BitString(static_cast<size_t>(n)));
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw InvalidArgument("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range");
        }
        if (u == v) {
            throw InvalidArgument("self-loop at vertex " + std::to_string(u));
        }
        if (u > v) {
            std::swap(u, v);
        }
        if (adjacency_[u].get(v)) {
            continue;
        }
        adjacency_[u].set(v);
        adjacency_[v].set(u);
        edges_.emplace_back(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    validate();
}

void Graph::validate() const {
    size_t ones = 0;
    for (int u = 0; u < n_; u++) {
        if (adjacency_[u].get(u)) {
            throw InvalidArgument("adjacency has a nonzero diagonal");
        }
        ones += adjacency_[u].popcount();
        for (int v : adjacency_[u].indices()) {
            if (!adjacency_[v].get(u)) {
                throw InvalidArgument("adjacency is not symmetric");
            }
        }
    }
    if (ones != 2 * edges_.size()) {
        throw InvalidArgument("edge list disagrees with adjacency matrix");
    }
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) {
        throw InvalidArgument("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n_));
    }
}

bool Graph::adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return adjacency_[u].get(v);
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adjacency_[v].popcount());
}

int Graph::max_degree() const {
    int best = 0;
    for (int v = 0; v < n_; v++) {
        best = std::max(best, degree(v));
    }
    return best;
}

const BitString &Graph::row(int v) const {
    check_vertex(v);
    return adjacency_[v];
}

BitString Graph::multiply(const BitString &x) const {
    if (x.size() != static_cast<size_t>(n_)) {
        throw InvalidArgument("multiply: vector length does not match vertex count");
    }
    BitString out(static_cast<size_t>(n_));
    for (int u = 0; u < n_; u++) {
        if (dot(adjacency_[u], x, DotMode::Parity)) {
            out.set(u);
        }
    }
    return out;
}

BitString neighborhood(const Graph &g, int v) { return g.row(v); }

int induced_edge_count(const Graph &g, const BitString &x) {
    if (x.size() != static_cast<size_t>(g.n())) {
        throw InvalidArgument("induced_edge_count: length mismatch");
    }
    int twice = 0;
    for (int u : x.indices()) {
        twice += dot(g.row(u), x);
    }
    return twice / 2;
}

Graph triangular_lattice(int rows, int cols) {
    if (rows < 2 || cols < 2) {
        throw InvalidArgument("triangular_lattice needs rows >= 2 and cols >= 2");
    }
    auto id = [cols](int r, int c) { return r * cols + c; };
    std::vector<Edge> edges;
    for (int r = 0; r < rows; r++) {
        for (int c = 0; c + 1 < cols; c++) {
            edges.emplace_back(id(r, c), id(r, c + 1));
        }
    }
    for (int r = 0; r + 1 < rows; r++) {
        int odd = (r % 2 == 1) ? r : r + 1;
        int even = (r % 2 == 1) ? r + 1 : r;
        for (int c = 0; c < cols; c++) {
            edges.emplace_back(id(odd, c), id(even, c));
            if (c + 1 < cols) {
                edges.emplace_back(id(odd, c), id(even, c + 1));
            }
        }
    }
    return Graph(rows * cols, edges);
}

Graph triangle_strip(int n) {
    if (n < 3) {
        throw InvalidArgument("triangle_strip needs n >= 3");
    }
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; i++) {
        edges.emplace_back(i, i + 1);
        if (i + 2 < n) {
            edges.emplace_back(i, i + 2);
        }
    }
    return Graph(n, edges);
}

Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; u++) {
        for (int v = u + 1; v < n; v++) {
            edges.emplace_back(u, v);
        }
    }
    return Graph(n, edges);
}

bool is_valid_cover(const Graph &g, const TriangleCover &cover) {
    if (cover.triangles.size() > static_cast<size_t>(g.n())) {
        return false;
    }
    BitString covered(static_cast<size_t>(g.n()));
    for (const auto &tau : cover.triangles) {
        if (tau.size() != static_cast<size_t>(g.n()) || tau.popcount() != 3) {
            return false;
        }
        auto vs = tau.indices();
        if (!g.adjacent(vs[0], vs[1]) || !g.adjacent(vs[0], vs[2]) || !g.adjacent(vs[1], vs[2])) {
            return false;
        }
        for (int w : vs) {
            covered.set(static_cast<size_t>(w));
        }
    }
    return covered.popcount() == static_cast<size_t>(g.n());
}

TriangleCover triangle_cover(const Graph &g) {
    int n = g.n();
    TriangleCover cover;
    std::vector<bool> covered(static_cast<size_t>(n), false);
    for (int v = 0; v < n; v++) {
        if (covered[v]) {
            continue;
        }
        // Smallest sorted triple containing v.
        std::array<int, 3> best{-1, -1, -1};
        auto nbrs = g.row(v).indices();
        for (size_t i = 0; i < nbrs.size(); i++) {
            for (size_t j = i + 1; j < nbrs.size(); j++) {
                if (!g.adjacent(nbrs[i], nbrs[j])) {
                    continue;
                }
                std::array<int, 3> tri{v, nbrs[i], nbrs[j]};
                std::sort(tri.begin(), tri.end());
                if (best[0] < 0 || tri < best) {
                    best = tri;
                }
            }
        }
        if (best[0] < 0) {
            throw UncoverableVertex(v);
        }
        BitString tau(static_cast<size_t>(n));
        for (int w : best) {
            tau.set(w);
            covered[w] = true;
        }
        cover.triangles.push_back(tau);
    }
    return cover;
}

Graph local_complement(const Graph &g, int v) {
    auto nbrs = neighborhood(g, v).indices();
    std::vector<Edge> edges;
    for (auto [a, b] : g.edges()) {
        bool both = g.adjacent(a, v) && g.adjacent(b, v);
        if (!both) {
            edges.emplace_back(a, b);
        }
    }
    for (size_t i = 0; i < nbrs.size(); i++) {
        for (size_t j = i + 1; j < nbrs.size(); j++) {
            if (!g.adjacent(nbrs[i], nbrs[j])) {
                edges.emplace_back(nbrs[i], nbrs[j]);
            }
        }
    }
    return Graph(g.n(), edges);
}

}  // namespace clusterproof
