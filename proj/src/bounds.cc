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

#include "clusterproof/bounds.h"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "clusterproof/errors.h"

namespace clusterproof {

namespace {

struct Names {
    BoundKind kind;
    const char *name;
    /// Short alias accepted on input.
    const char *alias;
};

constexpr Names kNames[] = {
    {BoundKind::GraphTest, "graph-test", "thm2"},
    {BoundKind::Anticommute, "anticommute", "lemma1"},
    {BoundKind::ProductAnticommute, "product-anticommute", "cor1"},
    {BoundKind::StabilizerProduct, "stabilizer-product", "lemma2"},
    {BoundKind::Rotation, "rotation", "lemma3"},
    {BoundKind::AdaptiveState, "adaptive-state", "lemma4"},
    {BoundKind::AdaptiveProbability, "adaptive-probability", "cor2"},
    {BoundKind::TestEps, "test-eps", "lemma5-eps"},
    {BoundKind::TestDelta, "test-delta", "lemma5-delta"},
    {BoundKind::TestGap, "test-gap", "lemma5-gap"},
    {BoundKind::SoundnessGap, "soundness-gap", "cor3-gap"},
    {BoundKind::MixQ, "mix-q", "lemma6-q"},
    {BoundKind::MixGap, "mix-gap", "lemma6-gap"},
    {BoundKind::MixExactGap, "mix-exact-gap", "lemma6-exact-gap"},
    {BoundKind::Repetitions, "repetitions", "hoeffding-n"},
    {BoundKind::TotalRepetitions, "total-repetitions", "thm1-n"},
};

class Params {
   public:
    explicit Params(const BoundRequest &req) : req_(req) {}

    double get(const std::string &name) const {
        auto it = req_.params.find(name);
        if (it == req_.params.end()) {
            throw MissingParameter(std::string(bound_name(req_.kind)) + " needs parameter '" + name + "'");
        }
        if (!std::isfinite(it->second)) {
            throw DomainError("parameter '" + name + "' is not finite");
        }
        return it->second;
    }

    double nonneg(const std::string &name) const {
        double v = get(name);
        if (v < 0) {
            throw DomainError("parameter '" + name + "' must be nonnegative");
        }
        return v;
    }

    double probability(const std::string &name) const {
        double v = get(name);
        if (v < 0 || v > 1) {
            throw DomainError("parameter '" + name + "' must lie in [0, 1]");
        }
        return v;
    }

    int count(const std::string &name) const {
        double v = nonneg(name);
        if (v != std::floor(v)) {
            throw DomainError("parameter '" + name + "' must be an integer");
        }
        return static_cast<int>(v);
    }

    int positive_count(const std::string &name) const {
        int v = count(name);
        if (v < 1) {
            throw DomainError("parameter '" + name + "' must be at least 1");
        }
        return v;
    }

    /// A dot product given directly, or computed over Z from bit strings.
    double dot_or(const std::string &name, const std::string &a, const std::string &b) const {
        if (req_.params.count(name)) {
            return nonneg(name);
        }
        auto ia = req_.bits.find(a);
        auto ib = req_.bits.find(b);
        if (ia != req_.bits.end() && ib != req_.bits.end()) {
            return dot(ia->second, ib->second);
        }
        throw MissingParameter(std::string(bound_name(req_.kind)) + " needs '" + name + "' or bit strings '" + a +
                               "' and '" + b + "'");
    }

   private:
    const BoundRequest &req_;
};

}  // namespace

const char *bound_name(BoundKind kind) {
    for (const auto &n : kNames) {
        if (n.kind == kind) {
            return n.name;
        }
    }
    return "?";
}

BoundKind parse_bound_kind(const std::string &name) {
    std::string lowered;
    for (char c : name) {
        lowered.push_back(c == '_' ? '-' : static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    for (const auto &n : kNames) {
        if (lowered == n.name || lowered == n.alias) {
            return n.kind;
        }
    }
    throw InvalidArgument("unknown bound kind '" + name + "'");
}

std::vector<BoundKind> all_bound_kinds() {
    std::vector<BoundKind> out;
    for (const auto &n : kNames) {
        out.push_back(n.kind);
    }
    return out;
}

double graph_test_bound(double pp, int n, int edges, double eps) {
    return (2 * std::sqrt(pp) + 2 * std::sqrt(2.0 * n) + std::sqrt(static_cast<double>(edges + n))) *
           std::pow(2 * eps, 0.25);
}

double rotation_bound(double eps, double delta) { return std::sqrt(2 * (eps + 2 * delta)); }

double adaptive_state_bound(int n, int m, double delta) { return (2.0 * n * m + 1) * delta; }

double adaptive_probability_bound(int n, int m, double delta) { return 2 * adaptive_state_bound(n, m, delta); }

double soundness_gap(int n, double delta) { return std::pow(delta, 8) / (std::pow(10.0, 17.7) * std::pow(n, 11.0)); }

double mix_gap_bound(int n, double delta) { return std::pow(delta, 8) / (std::pow(10.0, 18.8) * std::pow(n, 11.0)); }

double test_eps_from_delta(int n, double delta) {
    return std::pow(delta * delta / (22 + 25 * std::sqrt(static_cast<double>(n))), 4);
}

double test_delta_from_eps(int n, double eps) {
    return std::sqrt((22 + 25 * std::sqrt(static_cast<double>(n))) * std::pow(eps, 0.25));
}

QChoice choose_q(double c_test, double s_test, double s_calc, double delta, double c_calc) {
    if (!(c_test > s_test)) {
        throw DomainError("choose_q needs c_test > s_test");
    }
    return choose_q_from_test_gap(c_test - s_test, s_calc, delta, c_calc);
}

QChoice choose_q_from_test_gap(double test_gap, double s_calc, double delta, double c_calc) {
    if (!(delta > 0 && delta <= 1.0 / 6.0)) {
        throw DomainError("choose_q needs 0 < delta <= 1/6");
    }
    if (!(test_gap > 0)) {
        throw DomainError("choose_q needs c_test > s_test");
    }
    double denominator = 1 + test_gap - s_calc - delta;
    if (!(denominator > 0)) {
        throw DomainError("choose_q denominator is not positive");
    }
    QChoice out;
    out.q = test_gap / denominator;
    out.gap = (c_calc - s_calc - delta) * test_gap / denominator;
    return out;
}

long long hoeffding_repetitions(double gap, double error) {
    if (!(gap > 0 && gap <= 1)) {
        throw DomainError("hoeffding_repetitions needs 0 < gap <= 1");
    }
    if (!(error > 0 && error < 1)) {
        throw DomainError("hoeffding_repetitions needs 0 < error < 1");
    }
    double raw = 2 * std::log(1 / error) / (gap * gap);
    // Guard against 54.99999... style rounding of exact quotients.
    double rounded = std::round(raw);
    if (std::abs(raw - rounded) < 1e-9 * std::max(1.0, rounded)) {
        raw = rounded;
    }
    return static_cast<long long>(std::ceil(raw));
}

double total_log10_repetitions(int n, double delta) { return 37.9 + 22 * std::log10(n) - 16 * std::log10(delta); }

double chain_constant() { return 8 * std::pow(4.0, 4) * std::pow(81.0, 4) * std::pow(47.0, 4); }

BoundResult evaluate(const BoundRequest &req) {
    Params p(req);
    BoundResult r;
    switch (req.kind) {
        case BoundKind::GraphTest: {
            double pp = p.dot_or("pp", "p", "p");
            r.value = graph_test_bound(pp, p.positive_count("n"), p.count("edges"), p.nonneg("eps"));
            r.formula = "(2*sqrt(p.p) + 2*sqrt(2n) + sqrt(|E|+n)) * (2*eps)^(1/4)";
            break;
        }
        case BoundKind::Anticommute:
            r.value = 4 * std::sqrt(2 * p.nonneg("eps"));
            r.formula = "4*sqrt(2*eps)";
            break;
        case BoundKind::ProductAnticommute:
            r.value = 4 * p.dot_or("st", "s", "t") * std::sqrt(2 * p.nonneg("eps"));
            r.formula = "4*(s.t)*sqrt(2*eps)";
            break;
        case BoundKind::StabilizerProduct:
            r.value = (2 * p.nonneg("tAt") + p.dot_or("tt", "t", "t")) * std::sqrt(2 * p.nonneg("eps"));
            r.formula = "(2*(t.At) + t.t)*sqrt(2*eps)";
            break;
        case BoundKind::Rotation:
            r.value = rotation_bound(p.nonneg("eps"), p.nonneg("delta"));
            r.formula = "sqrt(2*(eps + 2*delta))";
            break;
        case BoundKind::AdaptiveState:
            r.value = adaptive_state_bound(p.count("n"), p.count("m"), p.nonneg("delta"));
            r.formula = "(2*n*m + 1)*delta";
            break;
        case BoundKind::AdaptiveProbability: {
            int m = req.params.count("m") ? p.count("m") : 4;
            r.value = adaptive_probability_bound(p.count("n"), m, p.nonneg("delta"));
            r.formula = "2*(2*n*m + 1)*delta";
            break;
        }
        case BoundKind::TestEps:
            r.value = test_eps_from_delta(p.positive_count("n"), p.nonneg("delta"));
            r.formula = "(delta^2 / (22 + 25*sqrt(n)))^4";
            break;
        case BoundKind::TestDelta:
            r.value = test_delta_from_eps(p.positive_count("n"), p.nonneg("eps"));
            r.formula = "sqrt((22 + 25*sqrt(n)) * eps^(1/4))";
            break;
        case BoundKind::TestGap:
            r.value = test_eps_from_delta(p.positive_count("n"), p.nonneg("delta")) / (2 * p.positive_count("N_G"));
            r.formula = "(1/(2*N_G)) * (delta^2 / (22 + 25*sqrt(n)))^4";
            break;
        case BoundKind::SoundnessGap:
            r.value = soundness_gap(p.positive_count("n"), p.nonneg("delta"));
            r.formula = "delta^8 / (10^17.7 * n^11)";
            break;
        case BoundKind::MixQ:
            r.value = choose_q(p.probability("c_test"), p.probability("s_test"), p.probability("s_calc"),
                               p.get("delta"))
                          .q;
            r.formula = "(c_test - s_test) / (1 + c_test - s_calc - s_test - delta)";
            break;
        case BoundKind::MixExactGap:
            r.value = choose_q(p.probability("c_test"), p.probability("s_test"), p.probability("s_calc"),
                               p.get("delta"), p.probability("c_calc"))
                          .gap;
            r.formula = "(c_calc - s_calc - delta)(c_test - s_test) / (1 + c_test - s_calc - s_test - delta)";
            break;
        case BoundKind::MixGap:
            r.value = mix_gap_bound(p.positive_count("n"), p.nonneg("delta"));
            r.formula = "delta^8 / (10^18.8 * n^11)";
            break;
        case BoundKind::Repetitions: {
            double error = req.params.count("error") ? p.get("error") : 1.0 / 3.0;
            r.value = static_cast<double>(hoeffding_repetitions(p.get("gap"), error));
            r.formula = "ceil(2*ln(1/error) / gap^2)";
            break;
        }
        case BoundKind::TotalRepetitions: {
            double delta = p.get("delta");
            if (!(delta > 0)) {
                throw DomainError("total-repetitions needs delta > 0");
            }
            r.value = std::pow(10.0, total_log10_repetitions(p.positive_count("n"), delta));
            r.formula = "10^37.9 * n^22 / delta^16";
            break;
        }
    }
    return r;
}

std::vector<ChainStage> bound_chain_report(int n, int edges, double eps) {
    if (n < 1 || edges < 0 || !(eps >= 0)) {
        throw InvalidArgument("bound_chain_report needs n >= 1, edges >= 0, eps >= 0");
    }
    std::vector<ChainStage> out;
    double graph = graph_test_bound(1, n, edges, eps);
    out.push_back({"graph-test", "(2 + 2*sqrt(2n) + sqrt(|E|+n)) * (2*eps)^(1/4)", graph});
    double rotated = rotation_bound(eps, graph);
    out.push_back({"rotation", "sqrt(2*(eps + 2*delta_graph))", rotated});
    out.push_back({"adaptive-state", "(8n + 1)*delta_rotation", adaptive_state_bound(n, 4, rotated)});
    double prob = adaptive_probability_bound(n, 4, rotated);
    out.push_back({"adaptive-probability", "2*(8n + 1)*delta_rotation", prob});
    out.push_back({"soundness-gap", "delta_adaptive^8 / (10^17.7 * n^11)", soundness_gap(n, prob)});
    return out;
}

}  // namespace clusterproof
