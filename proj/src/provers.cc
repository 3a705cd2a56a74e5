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

#include "clusterproof/provers.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "clusterproof/errors.h"
#include "clusterproof/graphstate.h"

namespace clusterproof {

namespace {

constexpr double kAngleSlack = 1e-12;

void check_angles(const std::vector<double> &theta) {
    for (size_t v = 0; v < theta.size(); v++) {
        double t = theta[v];
        if (!std::isfinite(t) || t < -kAngleSlack || t > std::numbers::pi / 2 + kAngleSlack) {
            throw InvalidArgument("angle for vertex " + std::to_string(v) + " is outside [0, pi/2]: " +
                                  std::to_string(t));
        }
    }
}

std::span<const int> block(const Responder &r) { return std::span<const int>(r.qubits); }

}  // namespace

const char *label_name(QueryLabel label) {
    switch (label) {
        case QueryLabel::X:
            return "X";
        case QueryLabel::Z:
            return "Z";
        case QueryLabel::RPlus:
            return "R+";
        case QueryLabel::RMinus:
            return "R-";
        case QueryLabel::Ignore:
            break;
    }
    return "I";
}

QueryLabel parse_label(const std::string &name) {
    if (name == "X") return QueryLabel::X;
    if (name == "Z") return QueryLabel::Z;
    if (name == "R+" || name == "RPlus") return QueryLabel::RPlus;
    if (name == "R-" || name == "RMinus") return QueryLabel::RMinus;
    if (name == "I" || name == "Ignore") return QueryLabel::Ignore;
    throw InvalidArgument("unknown query label '" + name + "'");
}

const Responder &ProverSet::responder(int v) const {
    if (v < 0 || v >= size()) {
        throw InvalidArgument("prover " + std::to_string(v) + " does not exist");
    }
    return responders[static_cast<size_t>(v)];
}

ProverSet xz_plane_provers(StateVector state, const std::vector<std::array<double, kNumProverLabels>> &angles,
                           std::vector<double> theta) {
    std::vector<Responder> rs;
    for (size_t v = 0; v < angles.size(); v++) {
        Responder r;
        r.qubits = {static_cast<int>(v)};
        for (size_t k = 0; k < kNumProverLabels; k++) {
            r.observables[k] = Matrix::xz_plane(angles[v][k]);
        }
        rs.push_back(std::move(r));
    }
    return custom_provers(std::move(state), std::move(rs), std::move(theta));
}

ProverSet honest_provers(const Graph &g, const std::vector<double> &theta) {
    if (theta.size() != static_cast<size_t>(g.n())) {
        throw InvalidArgument("need one angle per vertex");
    }
    check_angles(theta);
    std::vector<std::array<double, kNumProverLabels>> angles;
    for (double t : theta) {
        angles.push_back({0.0, std::numbers::pi / 2, t, -t});
    }
    return xz_plane_provers(build_graph_state(g).state, angles, theta);
}

ProverSet perturbed_provers(const ProverSet &base, double eta, Rng &rng) {
    if (!(eta >= 0)) {
        throw InvalidArgument("perturbation eta must be nonnegative");
    }
    ProverSet out = base;
    for (auto &r : out.responders) {
        if (r.classical) {
            continue;
        }
        size_t d = size_t{1} << r.qubits.size();
        for (auto &o : r.observables) {
            double a = rng.uniform(-eta, eta);
            Matrix u = Matrix::identity(d / 2).kron(Matrix::bloch_xz_rotation(a));
            o = u * o * u.adjoint();
        }
    }
    return out;
}

ProverSet classical_provers(const std::vector<std::array<int, kNumProverLabels>> &table,
                            const std::vector<double> &theta) {
    check_angles(theta);
    if (!theta.empty() && theta.size() != table.size()) {
        throw InvalidArgument("need one angle per classical prover");
    }
    ProverSet p;
    p.theta = theta;
    for (size_t v = 0; v < table.size(); v++) {
        Responder r;
        r.classical = true;
        for (size_t k = 0; k < kNumProverLabels; k++) {
            int reply = table[v][k];
            if (reply != 1 && reply != -1) {
                throw InvalidArgument("classical reply table entry for prover " + std::to_string(v) +
                                      " must be +1 or -1");
            }
            r.replies[k] = reply;
        }
        p.responders.push_back(r);
    }
    return p;
}

ProverSet custom_provers(StateVector state, std::vector<Responder> responders, std::vector<double> theta) {
    if (!state.is_normalized()) {
        throw InvalidArgument("shared state is not normalized");
    }
    std::vector<bool> owned(static_cast<size_t>(state.num_qubits()), false);
    for (size_t v = 0; v < responders.size(); v++) {
        auto &r = responders[v];
        if (r.classical) {
            continue;
        }
        if (r.qubits.empty()) {
            throw InvalidArgument("prover " + std::to_string(v) + " owns no qubits");
        }
        for (int q : r.qubits) {
            if (q < 0 || q >= state.num_qubits() || owned[static_cast<size_t>(q)]) {
                throw InvalidArgument("prover " + std::to_string(v) + " has an invalid or shared qubit " +
                                      std::to_string(q));
            }
            owned[static_cast<size_t>(q)] = true;
        }
        size_t d = size_t{1} << r.qubits.size();
        for (size_t k = 0; k < kNumProverLabels; k++) {
            if (r.observables[k].dim() != d || !r.observables[k].is_involution(1e-9)) {
                throw InvalidArgument("prover " + std::to_string(v) + " observable " +
                                      label_name(static_cast<QueryLabel>(k)) +
                                      " is not a Hermitian involution on its block");
            }
        }
    }
    check_angles(theta);
    if (!theta.empty() && theta.size() != responders.size()) {
        throw InvalidArgument("need one angle per prover");
    }
    ProverSet p;
    p.responders = std::move(responders);
    p.state = std::move(state);
    p.theta = std::move(theta);
    return p;
}

void apply_label(StateVector &s, const ProverSet &p, int v, QueryLabel label) {
    if (label == QueryLabel::Ignore) {
        return;
    }
    const Responder &r = p.responder(v);
    if (r.classical) {
        throw InvalidArgument("classical prover has no operator to apply");
    }
    s.apply(r.observable(label), block(r));
}

static void check_query(const ProverSet &p, const Query &q) {
    if (q.bases.size() != static_cast<size_t>(p.size())) {
        throw InvalidArgument("query assigns " + std::to_string(q.bases.size()) + " labels to " +
                              std::to_string(p.size()) + " provers");
    }
    if (q.sign != 1 && q.sign != -1) {
        throw InvalidArgument("query sign must be +-1");
    }
}

QueryResult execute_query(const ProverSet &p, const Query &q, Rng &rng) {
    check_query(p, q);
    QueryResult result;
    result.replies.assign(q.bases.size(), 1);
    std::optional<StateVector> s;
    for (int v = 0; v < p.size(); v++) {
        QueryLabel label = q.bases[static_cast<size_t>(v)];
        if (label == QueryLabel::Ignore) {
            continue;
        }
        const Responder &r = p.responder(v);
        int reply;
        if (r.classical) {
            reply = r.replies[static_cast<size_t>(label)];
        } else {
            if (!s) {
                s = *p.state;
            }
            reply = measure_in_place(*s, r.observable(label), block(r), rng);
        }
        result.replies[static_cast<size_t>(v)] = reply;
        result.product *= reply;
    }
    result.product *= q.sign;
    return result;
}

double query_expectation(const ProverSet &p, const Query &q) {
    check_query(p, q);
    double classical = q.sign;
    bool any_quantum = false;
    std::optional<StateVector> applied;
    for (int v = 0; v < p.size(); v++) {
        QueryLabel label = q.bases[static_cast<size_t>(v)];
        if (label == QueryLabel::Ignore) {
            continue;
        }
        const Responder &r = p.responder(v);
        if (r.classical) {
            classical *= r.replies[static_cast<size_t>(label)];
            continue;
        }
        if (!applied) {
            applied = *p.state;
        }
        applied->apply(r.observable(label), block(r));
        any_quantum = true;
    }
    if (!any_quantum) {
        return classical;
    }
    Complex e = p.state->inner(*applied);
    if (std::abs(e.imag()) >= tolerance::kImaginary) {
        throw ImaginaryResidue("query expectation has imaginary part");
    }
    return classical * e.real();
}

double query_pass_probability(const ProverSet &p, const Query &q, int target) {
    double e = query_expectation(p, q);
    return std::clamp(0.5 * (1 + target * e), 0.0, 1.0);
}

}  // namespace clusterproof
