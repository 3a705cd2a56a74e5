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

#include <fstream>
#include <sstream>

#include "clusterproof/errors.h"
#include "clusterproof/graphstate.h"
#include "clusterproof/rng.h"

namespace clusterproof {

namespace {

template <typename T>
T field(const Json &j, const char *key, const char *what) {
    if (!j.is_object() || !j.contains(key)) {
        throw InvalidArgument(std::string(what) + " needs field '" + key + "'");
    }
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception &) {
        throw InvalidArgument(std::string(what) + " field '" + key + "' has the wrong type");
    }
}

int parse_int(const std::string &s, const std::string &context) {
    size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used == 0 || used != s.size()) {
        throw InvalidArgument("expected an integer in '" + context + "'");
    }
    return v;
}

std::vector<int> int_list(const Json &j, const char *what) {
    if (!j.is_array()) {
        throw InvalidArgument(std::string(what) + " must be an array of integers");
    }
    std::vector<int> out;
    for (const auto &x : j) {
        if (!x.is_number_integer()) {
            throw InvalidArgument(std::string(what) + " must be an array of integers");
        }
        out.push_back(x.get<int>());
    }
    return out;
}

}  // namespace

Json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidArgument("cannot open '" + path + "'");
    }
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error &e) {
        throw InvalidArgument("'" + path + "' is not valid JSON: " + e.what());
    }
}

Graph graph_from_json(const Json &j) {
    if (!j.is_object()) {
        throw InvalidArgument("graph must be a JSON object");
    }
    if (j.contains("lattice")) {
        auto dims = int_list(j["lattice"], "lattice");
        if (dims.size() != 2) {
            throw InvalidArgument("lattice needs [rows, cols]");
        }
        return triangular_lattice(dims[0], dims[1]);
    }
    if (j.contains("strip")) {
        return triangle_strip(field<int>(j, "strip", "graph"));
    }
    if (j.contains("complete")) {
        return complete_graph(field<int>(j, "complete", "graph"));
    }
    int n = field<int>(j, "n", "graph");
    std::vector<Edge> edges;
    if (j.contains("edges")) {
        for (const auto &e : j["edges"]) {
            auto pair = int_list(e, "edge");
            if (pair.size() != 2) {
                throw InvalidArgument("each edge must be a pair [u, v]");
            }
            edges.emplace_back(pair[0], pair[1]);
        }
    }
    return Graph(n, edges);
}

Json graph_to_json(const Graph &g) {
    Json edges = Json::array();
    for (const auto &[u, v] : g.edges()) {
        edges.push_back({u, v});
    }
    return Json{{"n", g.n()}, {"edges", edges}};
}

Graph graph_from_spec(const std::string &spec) {
    if (spec == "k3") {
        return complete_graph(3);
    }
    auto colon = spec.find(':');
    if (colon != std::string::npos) {
        std::string family = spec.substr(0, colon);
        std::string arg = spec.substr(colon + 1);
        if (family == "complete") {
            return complete_graph(parse_int(arg, spec));
        }
        if (family == "strip") {
            return triangle_strip(parse_int(arg, spec));
        }
        if (family == "lattice") {
            auto x = arg.find('x');
            if (x == std::string::npos) {
                throw InvalidArgument("lattice spec must look like lattice:3x4");
            }
            return triangular_lattice(parse_int(arg.substr(0, x), spec), parse_int(arg.substr(x + 1), spec));
        }
    }
    return graph_from_json(read_json_file(spec));
}

std::vector<double> theta_from_json(const Json &j, int n) {
    std::vector<double> out(static_cast<size_t>(n), 0.0);
    if (j.is_number()) {
        std::fill(out.begin(), out.end(), j.get<double>());
    } else if (j.is_array()) {
        if (j.size() != static_cast<size_t>(n)) {
            throw InvalidArgument("theta array has " + std::to_string(j.size()) + " entries for " +
                                  std::to_string(n) + " vertices");
        }
        for (size_t v = 0; v < j.size(); v++) {
            if (!j[v].is_number()) {
                throw InvalidArgument("theta entries must be numbers");
            }
            out[v] = j[v].get<double>();
        }
    } else if (j.is_object()) {
        if (j.contains("default")) {
            std::fill(out.begin(), out.end(), field<double>(j, "default", "theta"));
        }
        for (const auto &[key, value] : j.items()) {
            if (key == "default") {
                continue;
            }
            int v = parse_int(key, "theta key " + key);
            if (v < 0 || v >= n) {
                throw InvalidArgument("theta key " + key + " is not a vertex");
            }
            if (!value.is_number()) {
                throw InvalidArgument("theta entries must be numbers");
            }
            out[static_cast<size_t>(v)] = value.get<double>();
        }
    } else {
        throw InvalidArgument("theta must be a number, array, or object");
    }
    return out;
}

ProverSet provers_from_json(const Json &j, const Graph &g, const std::vector<double> &theta) {
    std::string kind = j.is_string() ? j.get<std::string>() : field<std::string>(j, "kind", "strategy");
    if (kind == "honest") {
        return honest_provers(g, theta);
    }
    if (kind == "perturbed") {
        Rng rng(field<uint64_t>(j, "seed", "perturbed strategy"));
        return perturbed_provers(honest_provers(g, theta), field<double>(j, "eta", "perturbed strategy"), rng);
    }
    if (kind == "classical") {
        std::vector<std::array<int, kNumProverLabels>> table;
        for (const auto &row : field<Json>(j, "table", "classical strategy")) {
            auto r = int_list(row, "classical table row");
            if (r.size() != kNumProverLabels) {
                throw InvalidArgument("classical table rows need replies for X, Z, R+, R-");
            }
            table.push_back({r[0], r[1], r[2], r[3]});
        }
        if (table.size() != static_cast<size_t>(g.n())) {
            throw InvalidArgument("classical table needs one row per vertex");
        }
        return classical_provers(table, theta);
    }
    if (kind == "xz-plane") {
        std::vector<std::array<double, kNumProverLabels>> angles;
        for (const auto &row : field<Json>(j, "angles", "xz-plane strategy")) {
            auto r = row.get<std::vector<double>>();
            if (r.size() != kNumProverLabels) {
                throw InvalidArgument("xz-plane angle rows need angles for X, Z, R+, R-");
            }
            angles.push_back({r[0], r[1], r[2], r[3]});
        }
        if (angles.size() != static_cast<size_t>(g.n())) {
            throw InvalidArgument("xz-plane strategy needs one angle row per vertex");
        }
        Json state = j.contains("state") ? j["state"] : Json("graph");
        if (state.is_string()) {
            if (state.get<std::string>() != "graph") {
                throw InvalidArgument("state must be \"graph\" or an amplitude list");
            }
            return xz_plane_provers(build_graph_state(g).state, angles, theta);
        }
        std::vector<Complex> amps;
        for (const auto &a : state) {
            auto pair = a.get<std::vector<double>>();
            if (pair.size() != 2) {
                throw InvalidArgument("amplitudes must be [re, im] pairs");
            }
            amps.emplace_back(pair[0], pair[1]);
        }
        return xz_plane_provers(StateVector::from_amplitudes(std::move(amps)), angles, theta);
    }
    throw InvalidArgument("unknown strategy kind '" + kind + "' (honest, perturbed, classical, xz-plane)");
}

MeasurementPattern pattern_from_json(const Json &j) {
    MeasurementPattern pat;
    for (const auto &s : field<Json>(j, "steps", "pattern")) {
        PatternStep step;
        step.vertex = field<int>(s, "vertex", "pattern step");
        step.theta = field<double>(s, "theta", "pattern step");
        if (s.contains("x_deps")) {
            step.x_deps = int_list(s["x_deps"], "x_deps");
        }
        if (s.contains("z_deps")) {
            step.z_deps = int_list(s["z_deps"], "z_deps");
        }
        pat.steps.push_back(std::move(step));
    }
    pat.output_bits = int_list(field<Json>(j, "output_bits", "pattern"), "output_bits");
    return pat;
}

Json pattern_to_json(const MeasurementPattern &pat) {
    Json steps = Json::array();
    for (const auto &s : pat.steps) {
        steps.push_back({{"vertex", s.vertex}, {"theta", s.theta}, {"x_deps", s.x_deps}, {"z_deps", s.z_deps}});
    }
    return Json{{"steps", steps}, {"output_bits", pat.output_bits}};
}

ObservableLabel label_from_json(const Json &j, int n) {
    if (j.is_object()) {
        BitString q(static_cast<size_t>(n));
        BitString p(static_cast<size_t>(n));
        for (int v : j.contains("x") ? int_list(j["x"], "x support") : std::vector<int>{}) {
            if (v < 0 || v >= n) {
                throw InvalidArgument("label vertex out of range");
            }
            q.set(static_cast<size_t>(v));
        }
        for (int v : j.contains("z") ? int_list(j["z"], "z support") : std::vector<int>{}) {
            if (v < 0 || v >= n) {
                throw InvalidArgument("label vertex out of range");
            }
            p.set(static_cast<size_t>(v));
        }
        return ObservableLabel::product(std::move(q), std::move(p));
    }
    if (!j.is_string()) {
        throw InvalidArgument("label must be a string or an {x, z} object");
    }
    std::string s = j.get<std::string>();
    if (s == "I") {
        return ObservableLabel::identity();
    }
    auto colon = s.find(':');
    if (colon == std::string::npos) {
        throw InvalidArgument("label '" + s + "' must look like X:3");
    }
    std::string kind = s.substr(0, colon);
    int v = parse_int(s.substr(colon + 1), s);
    if (v < 0 || v >= n) {
        throw InvalidArgument("label '" + s + "' names a vertex out of range");
    }
    using K = ObservableLabel::Kind;
    if (kind == "X") {
        return ObservableLabel::single(K::X, v);
    }
    if (kind == "Z") {
        return ObservableLabel::single(K::Z, v);
    }
    if (kind == "R+") {
        return ObservableLabel::single(K::RPlus, v);
    }
    if (kind == "R-") {
        return ObservableLabel::single(K::RMinus, v);
    }
    throw InvalidArgument("label kind '" + kind + "' is not one of X, Z, R+, R-");
}

std::vector<ObservableLabel> labels_from_json(const Json &j, int n) {
    if (!j.is_array()) {
        throw InvalidArgument("labels must be an array");
    }
    std::vector<ObservableLabel> out;
    for (const auto &x : j) {
        out.push_back(label_from_json(x, n));
    }
    return out;
}

}  // namespace clusterproof
