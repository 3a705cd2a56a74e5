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

#ifndef CLUSTERPROOF_PROTOCOL_H
#define CLUSTERPROOF_PROTOCOL_H

#include <cstdint>
#include <functional>
#include <vector>

#include "clusterproof/mbqc.h"
#include "clusterproof/provers.h"
#include "clusterproof/rng.h"
#include "clusterproof/selftest.h"

namespace clusterproof {

enum class Branch { Calculate, Test };

const char *branch_name(Branch b);

struct ProtocolConfig {
    /// Probability of a CALCULATE round.
    double q = 0.5;
    TestParameters params;
    MeasurementPattern pattern;
    /// Number of rounds.
    long long rounds = 1;
    /// Accept iff the accept count is strictly above this.
    double threshold = 0;

    /// Midpoint threshold N (c_ip + s_ip) / 2.
    static double midpoint_threshold(long long rounds, double c_ip, double s_ip);
};

struct RoundRecord {
    Branch branch = Branch::Test;
    bool accepted = false;
    /// Subtest for TEST rounds, pattern output for CALCULATE rounds.
    Subtest subtest;
    int output = 0;
};

struct ProtocolResult {
    bool accepted = false;
    long long accept_count = 0;
    double threshold = 0;
    std::vector<RoundRecord> rounds;
};

/// One round: CALCULATE with probability q (accept iff the pattern
/// outputs 1), otherwise one self-test (accept iff it passes).
RoundRecord run_round(const ProverSet &p, const ProtocolConfig &cfg, Rng &rng);

/// A single round as a callable, so synthetic provers can stand in for
/// quantum ones.
using RoundFn = std::function<RoundRecord(Rng &)>;

/// Runs cfg.rounds independent rounds, round i on Rng::stream(seed, i), and
/// accepts iff the accept count exceeds the threshold.
ProtocolResult run_amplified(const RoundFn &round, long long rounds, double threshold, uint64_t seed, int jobs = 1);
ProtocolResult run_amplified(const ProverSet &p, const ProtocolConfig &cfg, uint64_t seed, int jobs = 1);

/// Exact accept probability of one round: q P(output = 1) + (1 - q) P(pass).
double round_accept_probability(const ProverSet &p, const ProtocolConfig &cfg);

/// Labels sent to each prover by the one-shot test, per vertex.
std::vector<std::vector<QueryLabel>> test_labels(const TestParameters &params);

/// True iff every label the pattern can send to a prover is also sent to
/// it by the test, and every pattern angle is the test angle for its vertex.
bool calculation_labels_covered(const TestParameters &params, const MeasurementPattern &pat);

}  // namespace clusterproof

#endif
