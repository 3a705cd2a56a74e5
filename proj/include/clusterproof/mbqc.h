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

#ifndef CLUSTERPROOF_MBQC_H
#define CLUSTERPROOF_MBQC_H

#include <array>
#include <vector>

#include "clusterproof/graph.h"
#include "clusterproof/provers.h"
#include "clusterproof/rng.h"

namespace clusterproof {

/// One adaptive measurement: vertex v is measured with R(+-theta), the sign
/// set by the parity of the corrected outcome bits of x_deps, and its
/// outcome is flipped by the parity of those of z_deps.
struct PatternStep {
    int vertex = 0;
    double theta = 0;
    std::vector<int> x_deps;
    std::vector<int> z_deps;
};

struct MeasurementPattern {
    std::vector<PatternStep> steps;
    /// The result is the parity of the corrected outcome bits of these
    /// vertices. An output of 1 means "accept".
    std::vector<int> output_bits;

    /// Throws InvalidArgument when a vertex is measured twice, is out of
    /// range, a dependency refers to a vertex not measured earlier, an output
    /// vertex is never measured, or an angle lies outside [0, pi/2].
    void validate(int n) const;
};

struct StepRecord {
    int vertex = 0;
    /// +1 for R(+theta), -1 for R(-theta).
    int sign = 1;
    int raw = 1;
    int corrected = 1;
};

struct RunResult {
    int output = 0;
    std::vector<StepRecord> transcript;
};

/// Runs the pattern against the provers, one prover query per step.
/// Throws InvalidArgument ("missing angle support") when a step's angle is
/// not the angle the prover answers R(+-theta) for.
RunResult run_pattern(const ProverSet &p, const MeasurementPattern &pat, Rng &rng);

/// Exact distribution {P(output = 0), P(output = 1)} by enumerating every
/// outcome branch with Born weights.
std::array<double, 2> pattern_distribution(const ProverSet &p, const MeasurementPattern &pat);

/// Output distribution of the ideal pattern on |G>, measuring each step's
/// vertex in cos(a) X + sin(a) Z with a = +-theta. Independent of the
/// prover code; cost grows as 2^steps * 2^n.
std::array<double, 2> reference_run(const Graph &g, const MeasurementPattern &pat);

/// The labels the pattern may send to each prover (R+ and R- per measured
/// vertex), as a per-vertex set.
std::vector<std::vector<QueryLabel>> pattern_labels(int n, const MeasurementPattern &pat);

/// Two cascaded teleportations on a 3-qubit line with X-Y plane
/// measurements R(a) = cos(a) X + sin(a) Y. Returns the largest
/// phase-insensitive distance sqrt(2 - 2 |<a|b>|), over all four outcome
/// branches, between the corrected last qubit and
/// H U(theta2) H U(theta1)|+>, U(a) = exp(i a Z / 2).
double teleport_chain_check(double theta1, double theta2);

}  // namespace clusterproof

#endif
