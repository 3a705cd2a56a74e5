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

#ifndef CLUSTERPROOF_ISOMETRY_H
#define CLUSTERPROOF_ISOMETRY_H

#include <string>
#include <vector>

#include "clusterproof/graph.h"
#include "clusterproof/provers.h"
#include "clusterproof/statevec.h"

namespace clusterproof {

/// An operator M on the ideal side, paired with its prover-side M'.
struct ObservableLabel {
    enum class Kind { Identity, X, Z, RPlus, RMinus, Product };
    Kind kind = Kind::Identity;
    int vertex = -1;
    /// X^q Z^p for Product labels.
    BitString q;
    BitString p;

    static ObservableLabel identity() { return {}; }
    static ObservableLabel single(Kind kind, int vertex) { return {kind, vertex, {}, {}}; }
    static ObservableLabel product(BitString q, BitString p) { return {Kind::Product, -1, std::move(q), std::move(p)}; }

    /// "I", "X:3", "Z:0", "R+:2", "R-:2", or "XZ:q=0110,p=1000".
    std::string str() const;
};

/// I, then X_v, Z_v, R+_v, R-_v for every vertex.
std::vector<ObservableLabel> single_vertex_labels(int n);

/// Register layout of the isometry output, little-endian:
/// [prover qubits][n "top" ancillas][n "out" ancillas]. Each (top_v, out_v)
/// pair starts as an EPR pair; after the circuit the out register carries
/// the extracted graph-state qubits.
struct PhiLayout {
    int system = 0;
    int n = 0;
    int top(int v) const { return system + v; }
    int out(int v) const { return system + n + v; }
    int total() const { return system + 2 * n; }
};

PhiLayout phi_layout(const ProverSet &p);

/// Applies the per-vertex circuit controlled-X', H, controlled-Z', H,
/// controlled-X' (control on the out ancilla, target the prover's block) to
/// `input` (a state of the provers' qubits) tensored with the EPR ancillas.
StateVector apply_phi(const ProverSet &p, const StateVector &input);
/// apply_phi on the provers' shared state.
StateVector apply_phi(const ProverSet &p);

/// Applies the prover-side operator M' of a label to a state of the
/// provers' qubits.
void apply_prover_label(StateVector &s, const ProverSet &p, const ObservableLabel &label);
/// Applies the ideal operator M to a graph-state register; rotation labels
/// use the angles in `theta` (0 where absent).
void apply_ideal_label(StateVector &s, const ObservableLabel &label, const std::vector<double> &theta);

/// max(max_v 1 - <S'_v>, max over cover triangles 1 + <X'^tau Z'^(A tau)>).
double graph_deviation(const ProverSet &p, const Graph &g);

/// 1 - <R'_v(t theta)(cos(theta) Z'^(A 1_v) + t sin(theta) X'_u Z'^(A 1_u + 1_v))>.
double rotation_deviation(const ProverSet &p, const Graph &g, int v, int u, int t);

/// || X'_v Z'_v psi' + Z'_v X'_v psi' ||.
double anticommutator_norm(const ProverSet &p, int v);

struct LabelReport {
    ObservableLabel label;
    double distance = 0;
    double bound = 0;
    /// "graph-test" or "rotation".
    std::string bound_name;
    /// The deviation the bound was evaluated at.
    double eps = 0;
    bool satisfied = false;
};

struct AnticommutatorReport {
    int vertex = 0;
    double norm = 0;
    double bound = 0;
    bool satisfied = false;
};

struct EquivalenceReport {
    std::vector<LabelReport> labels;
    std::vector<AnticommutatorReport> anticommutators;
    double eps_graph = 0;
    /// Norm of the partial overlap of Phi(psi') with |G> before
    /// normalization.
    double junk_overlap = 0;
    int junk_qubits = 0;
    /// True when the junk state was re-fit across all labels because the
    /// identity-label junk left some bound violated.
    bool junk_refit = false;

    bool all_satisfied() const;
    double max_distance() const;
};

/// Computes ||Phi(M' psi') - junk (x) M |G>|| for each label and compares it
/// with the matching bound. The junk state is the normalized partial
/// overlap (I (x) <G|_out) Phi(psi'). Throws JunkDegenerate when that
/// overlap has norm below 1e-6.
EquivalenceReport equivalence_distance(const ProverSet &p, const Graph &g, const std::vector<ObservableLabel> &labels);

}  // namespace clusterproof

#endif
