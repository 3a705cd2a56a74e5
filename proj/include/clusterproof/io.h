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

#ifndef CLUSTERPROOF_IO_H
#define CLUSTERPROOF_IO_H

#include <string>
#include <vector>

#include "clusterproof/graph.h"
#include "clusterproof/isometry.h"
#include "clusterproof/mbqc.h"
#include "clusterproof/provers.h"
#include "json.hpp"

namespace clusterproof {

using Json = nlohmann::ordered_json;

/// Reads a whole file as JSON. Throws InvalidArgument naming the path on
/// open or parse failure.
Json read_json_file(const std::string &path);

/// Accepted graph forms:
///   {"n": 3, "edges": [[0, 1], [1, 2], [0, 2]]}
///   {"lattice": [rows, cols]}, {"strip": n}, {"complete": n}
Graph graph_from_json(const Json &j);
Json graph_to_json(const Graph &g);

/// Graph from a spec string: "k3", "complete:4", "strip:5", "lattice:3x4",
/// or a path to a JSON file.
Graph graph_from_spec(const std::string &spec);

/// Angles for n vertices from a number (same angle everywhere), an array
/// of n numbers, or an object {"default": a, "2": b, ...}.
std::vector<double> theta_from_json(const Json &j, int n);

/// Strategy forms:
///   {"kind": "honest"}
///   {"kind": "perturbed", "eta": 0.05, "seed": 3}
///   {"kind": "classical", "table": [[rX, rZ, rR+, rR-], ...]}
///   {"kind": "xz-plane", "angles": [[aX, aZ, aR+, aR-], ...],
///    "state": "graph" | [[re, im], ...]}
ProverSet provers_from_json(const Json &j, const Graph &g, const std::vector<double> &theta);

/// {"steps": [{"vertex": v, "theta": a, "x_deps": [...], "z_deps": [...]}],
///  "output_bits": [...]}
MeasurementPattern pattern_from_json(const Json &j);
Json pattern_to_json(const MeasurementPattern &pat);

/// "I", "X:v", "Z:v", "R+:v", "R-:v", or {"x": [...], "z": [...]} naming
/// the vertices in the X and Z supports of a product label.
ObservableLabel label_from_json(const Json &j, int n);
std::vector<ObservableLabel> labels_from_json(const Json &j, int n);

}  // namespace clusterproof

#endif
