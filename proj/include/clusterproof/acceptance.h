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

#ifndef CLUSTERPROOF_ACCEPTANCE_H
#define CLUSTERPROOF_ACCEPTANCE_H

#include <ostream>
#include <string>
#include <vector>

#include "clusterproof/graph.h"
#include "clusterproof/mbqc.h"
#include "clusterproof/rng.h"

namespace clusterproof {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;

    /// "PASS [3] chsh-anchor: ... (0.01 s)".
    std::string line() const;
};

struct AcceptanceOptions {
    int jobs = 1;
    /// Criteria to run; empty means all 13.
    std::vector<int> only;
};

int acceptance_criterion_count();
const char *acceptance_criterion_name(int id);

/// Runs one criterion. An exception inside it becomes a FAIL with the
/// message as detail.
CriterionResult run_criterion(int id, const AcceptanceOptions &opts = {});

/// Runs the selected criteria, writing each line to `out` as it finishes.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions &opts, std::ostream &out);

/// A random adaptive pattern on g: a random measurement order over a random
/// prefix of the vertices, dependencies drawn from earlier steps, angles
/// taken from theta, and a nonempty random output set.
MeasurementPattern random_pattern(const Graph &g, const std::vector<double> &theta, Rng &rng);

/// A connected graph on n >= 3 vertices in which every vertex lies in a
/// triangle: a triangle strip with a few random extra chords.
Graph random_coverable_graph(int n, Rng &rng);

}  // namespace clusterproof

#endif
