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

#ifndef CLUSTERPROOF_PROVERS_H
#define CLUSTERPROOF_PROVERS_H

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "clusterproof/graph.h"
#include "clusterproof/rng.h"
#include "clusterproof/statevec.h"

namespace clusterproof {

/// The four measurement requests a prover can receive, plus Ignore.
enum class QueryLabel { X = 0, Z = 1, RPlus = 2, RMinus = 3, Ignore = 4 };

inline constexpr int kNumProverLabels = 4;

const char *label_name(QueryLabel label);
QueryLabel parse_label(const std::string &name);

/// One label per prover and a verifier-side sign folded into the product.
struct Query {
    std::vector<QueryLabel> bases;
    int sign = 1;

    static Query ignore_all(int n) { return Query{std::vector<QueryLabel>(static_cast<size_t>(n), QueryLabel::Ignore), 1}; }
};

/// How one prover answers. Quantum responders measure a +-1 observable on
/// their own block of qubits of the shared state; classical responders
/// return a fixed reply per label.
struct Responder {
    std::vector<int> qubits;
    std::array<Matrix, kNumProverLabels> observables;
    bool classical = false;
    std::array<int, kNumProverLabels> replies{1, 1, 1, 1};

    const Matrix &observable(QueryLabel label) const { return observables[static_cast<size_t>(label)]; }
};

/// The shared state and the per-prover responders. Quantum prover sets carry
/// a state; purely classical sets do not.
struct ProverSet {
    std::vector<Responder> responders;
    std::optional<StateVector> state;
    /// Angle each prover answers R(+-theta) for. Empty when unspecified.
    std::vector<double> theta;

    int size() const { return static_cast<int>(responders.size()); }
    bool quantum() const { return state.has_value(); }
    const Responder &responder(int v) const;
};

/// Honest provers: shared state |G>, X' = X, Z' = Z and
/// R'(+-theta_v) = cos(theta_v) X +- sin(theta_v) Z.
/// Angles must lie in [0, pi/2].
ProverSet honest_provers(const Graph &g, const std::vector<double> &theta);

/// Conjugates every observable by an X-Z plane Bloch rotation (on the first
/// qubit of the prover's block) with an independent angle uniform in
/// [-eta, eta]. Draws are taken in vertex order, then label order.
ProverSet perturbed_provers(const ProverSet &base, double eta, Rng &rng);

/// Deterministic replies table[v][label]; every entry must be +-1.
ProverSet classical_provers(const std::vector<std::array<int, kNumProverLabels>> &table,
                            const std::vector<double> &theta = {});

/// Arbitrary quantum strategy. Each responder's observables must be
/// Hermitian involutions on its block, and blocks must be disjoint.
ProverSet custom_provers(StateVector state, std::vector<Responder> responders, std::vector<double> theta = {});

/// Single-qubit provers whose observable for each label is
/// cos(a) X + sin(a) Z with the given angle a = angles[v][label].
ProverSet xz_plane_provers(StateVector state, const std::vector<std::array<double, kNumProverLabels>> &angles,
                           std::vector<double> theta = {});

/// Applies prover v's observable for `label` to the state in place.
void apply_label(StateVector &s, const ProverSet &p, int v, QueryLabel label);

struct QueryResult {
    std::vector<int> replies;
    int product = 1;
};

/// Measures every non-ignored prover in ascending vertex order. Ignored
/// provers reply +1. The product includes the query sign.
QueryResult execute_query(const ProverSet &p, const Query &q, Rng &rng);

/// Exact expected value of the signed reply product.
double query_expectation(const ProverSet &p, const Query &q);

/// Probability that the signed product equals `target` (+-1).
double query_pass_probability(const ProverSet &p, const Query &q, int target);

}  // namespace clusterproof

#endif
