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

#include "clusterproof/mbqc.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <optional>

#include "clusterproof/errors.h"
#include "clusterproof/graphstate.h"

namespace clusterproof {

namespace {

constexpr double kAngleMatch = 1e-12;
constexpr double kBranchFloor = 1e-14;

int parity_of(const std::vector<int> &vertices, const std::vector<int> &bits) {
    int parity = 0;
    for (int v : vertices) {
        parity ^= bits[static_cast<size_t>(v)];
    }
    return parity;
}

void check_support(const ProverSet &p, const MeasurementPattern &pat) {
    pat.validate(p.size());
    if (p.theta.empty()) {
        return;
    }
    for (const auto &step : pat.steps) {
        double supported = p.theta[static_cast<size_t>(step.vertex)];
        if (std::abs(step.theta - supported) > kAngleMatch) {
            throw InvalidArgument("missing angle support: prover " + std::to_string(step.vertex) + " answers angle " +
                                  std::to_string(supported) + ", pattern asks for " + std::to_string(step.theta));
        }
    }
}

int output_parity(const MeasurementPattern &pat, const std::vector<int> &bits) {
    return parity_of(pat.output_bits, bits);
}

void enumerate(const ProverSet &p, const MeasurementPattern &pat, size_t k, const StateVector *state,
               std::vector<int> &bits, double weight, std::array<double, 2> &out) {
    if (k == pat.steps.size()) {
        out[static_cast<size_t>(output_parity(pat, bits))] += weight;
        return;
    }
    const PatternStep &step = pat.steps[k];
    QueryLabel label = parity_of(step.x_deps, bits) ? QueryLabel::RMinus : QueryLabel::RPlus;
    int flip = parity_of(step.z_deps, bits);
    const Responder &r = p.responder(step.vertex);
    auto &bit = bits[static_cast<size_t>(step.vertex)];
    if (r.classical) {
        int raw = r.replies[static_cast<size_t>(label)];
        bit = (raw < 0 ? 1 : 0) ^ flip;
        enumerate(p, pat, k + 1, state, bits, weight, out);
        bit = 0;
        return;
    }
    for (int raw : {1, -1}) {
        StateVector branch = *state;
        double prob = outcome_probability(branch, r.observable(label), r.qubits, raw);
        if (prob < kBranchFloor) {
            continue;
        }
        project(branch, r.observable(label), r.qubits, raw);
        bit = (raw < 0 ? 1 : 0) ^ flip;
        enumerate(p, pat, k + 1, &branch, bits, weight * prob, out);
    }
    bit = 0;
}

}  // namespace

void MeasurementPattern::validate(int n) const {
    std::vector<bool> measured(static_cast<size_t>(std::max(n, 0)), false);
    auto check_vertex = [n](int v) {
        if (v < 0 || v >= n) {
            throw InvalidArgument("pattern vertex " + std::to_string(v) + " out of range");
        }
    };
    for (const auto &step : steps) {
        check_vertex(step.vertex);
        if (measured[static_cast<size_t>(step.vertex)]) {
            throw InvalidArgument("vertex " + std::to_string(step.vertex) + " is measured twice");
        }
        for (const auto *deps : {&step.x_deps, &step.z_deps}) {
            for (int d : *deps) {
                check_vertex(d);
                if (!measured[static_cast<size_t>(d)]) {
                    throw InvalidArgument("dependency violation: step on vertex " + std::to_string(step.vertex) +
                                          " depends on vertex " + std::to_string(d) + " which is not measured earlier");
                }
            }
        }
        if (!(step.theta >= -kAngleMatch && step.theta <= std::numbers::pi / 2 + kAngleMatch)) {
            throw InvalidArgument("pattern angle outside [0, pi/2] at vertex " + std::to_string(step.vertex));
        }
        measured[static_cast<size_t>(step.vertex)] = true;
    }
    for (int v : output_bits) {
        check_vertex(v);
        if (!measured[static_cast<size_t>(v)]) {
            throw InvalidArgument("output vertex " + std::to_string(v) + " is never measured");
        }
    }
}

RunResult run_pattern(const ProverSet &p, const MeasurementPattern &pat, Rng &rng) {
    check_support(p, pat);
    RunResult result;
    std::vector<int> bits(static_cast<size_t>(p.size()), 0);
    std::optional<StateVector> state;
    for (const auto &step : pat.steps) {
        StepRecord rec;
        rec.vertex = step.vertex;
        rec.sign = parity_of(step.x_deps, bits) ? -1 : 1;
        QueryLabel label = rec.sign > 0 ? QueryLabel::RPlus : QueryLabel::RMinus;
        const Responder &r = p.responder(step.vertex);
        if (r.classical) {
            rec.raw = r.replies[static_cast<size_t>(label)];
        } else {
            if (!state) {
                state = *p.state;
            }
            rec.raw = measure_in_place(*state, r.observable(label), r.qubits, rng);
        }
        rec.corrected = parity_of(step.z_deps, bits) ? -rec.raw : rec.raw;
        bits[static_cast<size_t>(step.vertex)] = rec.corrected < 0 ? 1 : 0;
        result.transcript.push_back(rec);
    }
    result.output = output_parity(pat, bits);
    return result;
}

std::array<double, 2> pattern_distribution(const ProverSet &p, const MeasurementPattern &pat) {
    check_support(p, pat);
    std::array<double, 2> out{0, 0};
    std::vector<int> bits(static_cast<size_t>(p.size()), 0);
    const StateVector *state = p.quantum() ? &*p.state : nullptr;
    enumerate(p, pat, 0, state, bits, 1.0, out);
    return out;
}

std::array<double, 2> reference_run(const Graph &g, const MeasurementPattern &pat) {
    pat.validate(g.n());
    // Ideal run on the graph state written from its amplitude formula, with
    // unnormalized projectors applied in place; kept separate from the
    // prover machinery so it can serve as an oracle for it.
    const int n = g.n();
    const size_t dim = size_t{1} << n;
    std::vector<Complex> start(dim);
    for (size_t x = 0; x < dim; x++) {
        start[x] = amplitude(g, BitString::from_mask(x, static_cast<size_t>(n)));
    }
    std::array<double, 2> out{0, 0};
    std::vector<int> bits(static_cast<size_t>(n), 0);
    std::function<void(size_t, const std::vector<Complex> &)> visit = [&](size_t k, const std::vector<Complex> &psi) {
        double weight = 0;
        for (const auto &a : psi) {
            weight += std::norm(a);
        }
        if (weight < kBranchFloor) {
            return;
        }
        if (k == pat.steps.size()) {
            out[static_cast<size_t>(output_parity(pat, bits))] += weight;
            return;
        }
        const PatternStep &step = pat.steps[k];
        double a = parity_of(step.x_deps, bits) ? -step.theta : step.theta;
        // cos(a) X + sin(a) Z.
        const double m00 = std::sin(a), m01 = std::cos(a), m11 = -std::sin(a);
        const size_t bit = size_t{1} << step.vertex;
        for (int raw : {1, -1}) {
            std::vector<Complex> next = psi;
            const double sign = raw;
            for (size_t x = 0; x < dim; x++) {
                if (x & bit) {
                    continue;
                }
                Complex lo = psi[x], hi = psi[x | bit];
                next[x] = 0.5 * (lo + sign * (m00 * lo + m01 * hi));
                next[x | bit] = 0.5 * (hi + sign * (m01 * lo + m11 * hi));
            }
            bits[static_cast<size_t>(step.vertex)] = (raw < 0 ? 1 : 0) ^ parity_of(step.z_deps, bits);
            visit(k + 1, next);
        }
        bits[static_cast<size_t>(step.vertex)] = 0;
    };
    visit(0, start);
    return out;
}

std::vector<std::vector<QueryLabel>> pattern_labels(int n, const MeasurementPattern &pat) {
    pat.validate(n);
    std::vector<std::vector<QueryLabel>> labels(static_cast<size_t>(n));
    for (const auto &step : pat.steps) {
        auto &l = labels[static_cast<size_t>(step.vertex)];
        l.push_back(QueryLabel::RPlus);
        if (!step.x_deps.empty()) {
            l.push_back(QueryLabel::RMinus);
        }
    }
    return labels;
}

double teleport_chain_check(double theta1, double theta2) {
    auto xy_plane = [](double a) {
        return Matrix(2, {0, std::polar(1.0, -a), std::polar(1.0, a), 0});
    };
    auto phase_gate = [](double a) {
        return Matrix(2, {std::polar(1.0, a / 2), 0, 0, std::polar(1.0, -a / 2)});
    };

    StateVector target = plus_state(1);
    target.apply(phase_gate(theta1), 0);
    target.apply_h(0);
    target.apply(phase_gate(theta2), 0);
    target.apply_h(0);

    StateVector line = plus_state(3);
    line.apply_cz(0, 1);
    line.apply_cz(1, 2);

    const int q0[1] = {0};
    const int q1[1] = {1};
    double worst = 0;
    for (int m1 = 0; m1 < 2; m1++) {
        StateVector a = line;
        project(a, xy_plane(theta1), q0, m1 ? -1 : 1);
        for (int m2 = 0; m2 < 2; m2++) {
            StateVector b = a;
            project(b, xy_plane(m1 ? -theta2 : theta2), q1, m2 ? -1 : 1);
            // The measured qubits are now in product eigenstates whose
            // components are all nonzero, so the last qubit can be read off
            // the slice where both are 0.
            StateVector out = StateVector::from_amplitudes({b[0], b[4]});
            out.normalize();
            if (m2) {
                out.apply(Matrix::pauli_x(), 0);
            }
            if (m1) {
                out.apply(Matrix::pauli_z(), 0);
            }
            // Align the global phase, then take the norm of the difference.
            Complex overlap = target.inner(out);
            Complex phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : Complex(1);
            double diff = std::norm(target[0] * phase - out[0]) + std::norm(target[1] * phase - out[1]);
            worst = std::max(worst, std::sqrt(diff));
        }
    }
    return worst;
}

}  // namespace clusterproof
