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

#include "clusterproof/protocol.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "clusterproof/errors.h"
#include "clusterproof/parallel.h"

namespace clusterproof {

const char *branch_name(Branch b) { return b == Branch::Calculate ? "CALCULATE" : "TEST"; }

double ProtocolConfig::midpoint_threshold(long long rounds, double c_ip, double s_ip) {
    return static_cast<double>(rounds) * (c_ip + s_ip) / 2;
}

RoundRecord run_round(const ProverSet &p, const ProtocolConfig &cfg, Rng &rng) {
    if (!(cfg.q >= 0 && cfg.q <= 1)) {
        throw InvalidArgument("CALCULATE probability must lie in [0, 1]");
    }
    RoundRecord rec;
    if (rng.uniform() < cfg.q) {
        rec.branch = Branch::Calculate;
        rec.output = run_pattern(p, cfg.pattern, rng).output;
        rec.accepted = rec.output == 1;
    } else {
        rec.branch = Branch::Test;
        TestOutcome t = run_oneshot(p, cfg.params, rng);
        rec.subtest = t.subtest;
        rec.accepted = t.accepted;
    }
    return rec;
}

ProtocolResult run_amplified(const RoundFn &round, long long rounds, double threshold, uint64_t seed, int jobs) {
    if (rounds < 1) {
        throw InvalidArgument("need at least one round");
    }
    ProtocolResult result;
    result.threshold = threshold;
    result.rounds.resize(static_cast<size_t>(rounds));
    parallel_for(static_cast<size_t>(rounds), jobs, [&](size_t i) {
        Rng rng = Rng::stream(seed, i);
        result.rounds[i] = round(rng);
    });
    for (const auto &r : result.rounds) {
        result.accept_count += r.accepted ? 1 : 0;
    }
    result.accepted = static_cast<double>(result.accept_count) > threshold;
    return result;
}

ProtocolResult run_amplified(const ProverSet &p, const ProtocolConfig &cfg, uint64_t seed, int jobs) {
    return run_amplified([&](Rng &rng) { return run_round(p, cfg, rng); }, cfg.rounds, cfg.threshold, seed, jobs);
}

double round_accept_probability(const ProverSet &p, const ProtocolConfig &cfg) {
    double calc = cfg.q > 0 ? pattern_distribution(p, cfg.pattern)[1] : 0.0;
    double test = cfg.q < 1 ? exact_pass_probability(p, cfg.params) : 0.0;
    return cfg.q * calc + (1 - cfg.q) * test;
}

std::vector<std::vector<QueryLabel>> test_labels(const TestParameters &params) {
    int n = params.n();
    std::vector<std::set<QueryLabel>> seen(static_cast<size_t>(n));
    auto record = [&](const Subtest &s) {
        Query q = subtest_query(params, s);
        for (int v = 0; v < n; v++) {
            QueryLabel l = q.bases[static_cast<size_t>(v)];
            if (l != QueryLabel::Ignore) {
                seen[static_cast<size_t>(v)].insert(l);
            }
        }
    };
    for (int v = 0; v < n; v++) {
        record({SubtestKind::Vertex, v, 1});
        for (int t : {1, -1}) {
            record({SubtestKind::RThetaX, v, t});
            record({SubtestKind::RThetaZ, v, t});
        }
    }
    for (size_t k = 0; k < params.cover.triangles.size(); k++) {
        record({SubtestKind::Triangle, static_cast<int>(k), 1});
    }
    std::vector<std::vector<QueryLabel>> out;
    for (const auto &s : seen) {
        out.emplace_back(s.begin(), s.end());
    }
    return out;
}

bool calculation_labels_covered(const TestParameters &params, const MeasurementPattern &pat) {
    auto test = test_labels(params);
    auto calc = pattern_labels(params.n(), pat);
    for (size_t v = 0; v < calc.size(); v++) {
        for (QueryLabel l : calc[v]) {
            if (std::find(test[v].begin(), test[v].end(), l) == test[v].end()) {
                return false;
            }
        }
    }
    for (const auto &step : pat.steps) {
        if (std::abs(step.theta - params.theta[static_cast<size_t>(step.vertex)]) > 1e-12) {
            return false;
        }
    }
    return true;
}

}  // namespace clusterproof
