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

#ifndef CLUSTERPROOF_BOUNDS_H
#define CLUSTERPROOF_BOUNDS_H

#include <map>
#include <string>
#include <vector>

#include "clusterproof/bits.h"

namespace clusterproof {

enum class BoundKind {
    GraphTest,
    Anticommute,
    ProductAnticommute,
    StabilizerProduct,
    Rotation,
    AdaptiveState,
    AdaptiveProbability,
    TestEps,
    TestDelta,
    TestGap,
    SoundnessGap,
    MixQ,
    MixGap,
    MixExactGap,
    Repetitions,
    TotalRepetitions,
};

const char *bound_name(BoundKind kind);
/// Case-insensitive; '_' reads as '-'. Accepts each kind's short alias.
BoundKind parse_bound_kind(const std::string &name);
std::vector<BoundKind> all_bound_kinds();

/// Named numeric inputs plus optional bit strings. Parameter names:
///   eps, delta, n, m, edges, pp (p.p), st (s.t), tAt, tt, N_G,
///   c_test, s_test, s_calc, c_calc, gap, error.
/// Bit strings "p", "s", "t" may stand in for pp, st, and tt.
struct BoundRequest {
    BoundKind kind = BoundKind::Anticommute;
    std::map<std::string, double> params;
    std::map<std::string, BitString> bits;

    BoundRequest &set(const std::string &name, double value) {
        params[name] = value;
        return *this;
    }
};

struct BoundResult {
    double value = 0;
    std::string formula;
};

/// Throws MissingParameter when an input is absent and DomainError when it
/// is outside the formula's domain.
BoundResult evaluate(const BoundRequest &req);

/// (2 sqrt(p.p) + 2 sqrt(2n) + sqrt(|E| + n)) (2 eps)^(1/4).
double graph_test_bound(double pp, int n, int edges, double eps);
/// sqrt(2 (eps + 2 delta)).
double rotation_bound(double eps, double delta);
/// (2 n m + 1) delta.
double adaptive_state_bound(int n, int m, double delta);
/// 2 (2 n m + 1) delta.
double adaptive_probability_bound(int n, int m, double delta);
/// delta^8 / (10^17.7 n^11).
double soundness_gap(int n, double delta);
/// delta^8 / (10^18.8 n^11).
double mix_gap_bound(int n, double delta);
/// (delta^2 / (22 + 25 sqrt(n)))^4, and its inverse.
double test_eps_from_delta(int n, double delta);
double test_delta_from_eps(int n, double eps);

struct QChoice {
    double q = 0;
    double gap = 0;
};

/// q = (c_test - s_test) / (1 + c_test - s_calc - s_test - delta) and the
/// gap (c_calc - s_calc - delta)(c_test - s_test) / denominator.
/// Requires 0 < delta <= 1/6 and c_test > s_test.
QChoice choose_q(double c_test, double s_test, double s_calc, double delta, double c_calc = 2.0 / 3.0);
/// The same, given c_test - s_test directly. Use this when the difference
/// is far below the resolution of c_test itself.
QChoice choose_q_from_test_gap(double test_gap, double s_calc, double delta, double c_calc = 2.0 / 3.0);

/// ceil(2 ln(1/error) / gap^2). Requires 0 < gap <= 1 and 0 < error < 1.
long long hoeffding_repetitions(double gap, double error);

/// log10 of 10^37.9 n^22 / delta^16.
double total_log10_repetitions(int n, double delta);

/// The constant K in gap >= delta^8 / (K n^11) implied by composing the
/// bounds with N_G <= 4n and 1 <= sqrt(n) <= n: 8 * 4^4 * 81^4 * 47^4.
double chain_constant();

struct ChainStage {
    std::string name;
    std::string formula;
    double value = 0;
};

/// graph-test (p.p = 1) -> rotation -> adaptive-state (m = 4) ->
/// adaptive-probability -> soundness-gap, each stage feeding the next.
std::vector<ChainStage> bound_chain_report(int n, int edges, double eps);

}  // namespace clusterproof

#endif
