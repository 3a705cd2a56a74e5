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

#include "clusterproof/experiment.h"

#include <cmath>
#include <filesystem>
#include <set>
#include <sstream>

#include "clusterproof/bounds.h"
#include "clusterproof/errors.h"
#include "clusterproof/isometry.h"
#include "clusterproof/parallel.h"
#include "clusterproof/protocol.h"
#include "clusterproof/rng.h"
#include "clusterproof/selftest.h"

namespace clusterproof {

namespace {

constexpr std::pair<ExperimentKind, const char *> kKinds[] = {
    {ExperimentKind::SelfTest, "selftest"}, {ExperimentKind::Mbqc, "mbqc"},
    {ExperimentKind::Isometry, "isometry"}, {ExperimentKind::Protocol, "protocol"},
    {ExperimentKind::Bounds, "bounds"},
};

const std::set<std::string> kConfigKeys = {"kind",   "graph",  "theta",  "strategy",  "pattern",  "labels",
                                           "bounds", "trials", "seed",   "jobs",      "q",        "threshold",
                                           "soundness", "delta"};

bool is_graph_family(const std::string &spec) {
    return spec == "k3" || spec.rfind("complete:", 0) == 0 || spec.rfind("strip:", 0) == 0 ||
           spec.rfind("lattice:", 0) == 0;
}

Json resolve_file(const Json &j) { return j.is_string() ? read_json_file(j.get<std::string>()) : j; }

bool needs_seed(const ExperimentConfig &cfg) {
    return cfg.kind == ExperimentKind::SelfTest || cfg.kind == ExperimentKind::Mbqc ||
           cfg.kind == ExperimentKind::Protocol;
}

Json rate_summary(size_t trials, size_t accepted) {
    double rate = trials ? static_cast<double>(accepted) / static_cast<double>(trials) : 0.0;
    double se = trials ? std::sqrt(rate * (1 - rate) / static_cast<double>(trials)) : 0.0;
    return Json{{"trials", trials}, {"accepted", accepted}, {"rate", rate}, {"std_error", se}};
}

struct Setup {
    Graph graph;
    std::vector<double> theta;
    ProverSet provers;
};

Setup setup(const ExperimentConfig &cfg) {
    Setup s;
    s.graph = graph_from_spec(cfg.graph);
    s.theta = theta_from_json(cfg.theta, s.graph.n());
    s.provers = provers_from_json(cfg.strategy, s.graph, s.theta);
    return s;
}

std::vector<Json> rows_in_order(size_t count, int jobs, const std::function<Json(size_t)> &row) {
    std::vector<Json> rows(count);
    parallel_for(count, jobs, [&](size_t i) { rows[i] = row(i); });
    return rows;
}

ResultRecord run_selftest(const ExperimentConfig &cfg) {
    Setup s = setup(cfg);
    TestParameters params = TestParameters::make(s.graph, s.theta);
    uint64_t seed = *cfg.seed;
    ResultRecord rec;
    rec.rows = rows_in_order(cfg.trials, cfg.jobs, [&](size_t i) {
        Rng rng = Rng::stream(seed, i);
        TestOutcome t = run_oneshot(s.provers, params, rng);
        return Json{{"trial", i}, {"subtest", t.subtest.str()}, {"accepted", t.accepted}};
    });
    size_t accepted = 0;
    for (const auto &r : rec.rows) {
        accepted += r["accepted"].get<bool>() ? 1 : 0;
    }
    rec.summary = rate_summary(cfg.trials, accepted);
    rec.summary["c_test"] = c_test(params);
    rec.summary["exact_pass_probability"] = exact_pass_probability(s.provers, params);
    return rec;
}

ResultRecord run_mbqc(const ExperimentConfig &cfg) {
    Setup s = setup(cfg);
    MeasurementPattern pat = pattern_from_json(resolve_file(cfg.pattern));
    pat.validate(s.graph.n());
    uint64_t seed = *cfg.seed;
    ResultRecord rec;
    rec.rows = rows_in_order(cfg.trials, cfg.jobs, [&](size_t i) {
        Rng rng = Rng::stream(seed, i);
        RunResult r = run_pattern(s.provers, pat, rng);
        Json outcomes = Json::array();
        for (const auto &step : r.transcript) {
            outcomes.push_back(step.corrected);
        }
        return Json{{"trial", i}, {"output", r.output}, {"accepted", r.output == 1}, {"outcomes", outcomes}};
    });
    size_t ones = 0;
    for (const auto &r : rec.rows) {
        ones += r["accepted"].get<bool>() ? 1 : 0;
    }
    rec.summary = rate_summary(cfg.trials, ones);
    auto reference = reference_run(s.graph, pat);
    auto exact = pattern_distribution(s.provers, pat);
    rec.summary["reference_distribution"] = {reference[0], reference[1]};
    rec.summary["prover_distribution"] = {exact[0], exact[1]};
    rec.summary["total_variation"] = std::abs(reference[1] - exact[1]);
    return rec;
}

ResultRecord run_isometry(const ExperimentConfig &cfg) {
    Setup s = setup(cfg);
    std::vector<ObservableLabel> labels = cfg.labels.is_null() ? single_vertex_labels(s.graph.n())
                                                               : labels_from_json(resolve_file(cfg.labels), s.graph.n());
    EquivalenceReport report = equivalence_distance(s.provers, s.graph, labels);
    ResultRecord rec;
    size_t i = 0;
    for (const auto &l : report.labels) {
        rec.rows.push_back(Json{{"trial", i++},
                                {"label", l.label.str()},
                                {"distance", l.distance},
                                {"bound", l.bound},
                                {"bound_name", l.bound_name},
                                {"eps", l.eps},
                                {"accepted", l.satisfied}});
    }
    Json anti = Json::array();
    for (const auto &a : report.anticommutators) {
        anti.push_back(Json{{"vertex", a.vertex}, {"norm", a.norm}, {"bound", a.bound}, {"satisfied", a.satisfied}});
    }
    size_t satisfied = 0;
    for (const auto &r : rec.rows) {
        satisfied += r["accepted"].get<bool>() ? 1 : 0;
    }
    rec.summary = rate_summary(rec.rows.size(), satisfied);
    rec.summary["eps_graph"] = report.eps_graph;
    rec.summary["junk_overlap"] = report.junk_overlap;
    rec.summary["junk_qubits"] = report.junk_qubits;
    rec.summary["junk_refit"] = report.junk_refit;
    rec.summary["max_distance"] = report.max_distance();
    rec.summary["anticommutators"] = anti;
    rec.summary["all_satisfied"] = report.all_satisfied();
    return rec;
}

ResultRecord run_protocol(const ExperimentConfig &cfg) {
    Setup s = setup(cfg);
    ProtocolConfig pc;
    pc.q = cfg.q;
    pc.params = TestParameters::make(s.graph, s.theta);
    pc.pattern = pattern_from_json(resolve_file(cfg.pattern));
    pc.pattern.validate(s.graph.n());
    pc.rounds = static_cast<long long>(cfg.trials);
    std::optional<QChoice> mix;
    if (cfg.delta) {
        double n = s.graph.n();
        double test_gap = std::pow(*cfg.delta, 8) / (std::pow(10.0, 17.7) * std::pow(n, 11));
        mix = choose_q_from_test_gap(test_gap, 1.0 / 3.0, *cfg.delta);
        pc.q = mix->q;
    }
    double honest = round_accept_probability(honest_provers(s.graph, s.theta), pc);
    double soundness = cfg.soundness ? *cfg.soundness : mix ? honest - mix->gap : 0;
    pc.threshold = cfg.threshold ? *cfg.threshold : ProtocolConfig::midpoint_threshold(pc.rounds, honest, soundness);
    ProtocolResult res = run_amplified(s.provers, pc, *cfg.seed, cfg.jobs);
    ResultRecord rec;
    for (size_t i = 0; i < res.rounds.size(); i++) {
        const auto &r = res.rounds[i];
        Json row{{"trial", i}, {"branch", branch_name(r.branch)}, {"accepted", r.accepted}};
        if (r.branch == Branch::Test) {
            row["subtest"] = r.subtest.str();
        } else {
            row["output"] = r.output;
        }
        rec.rows.push_back(std::move(row));
    }
    rec.summary = rate_summary(res.rounds.size(), static_cast<size_t>(res.accept_count));
    rec.summary["honest_round_probability"] = honest;
    rec.summary["round_probability"] = round_accept_probability(s.provers, pc);
    rec.summary["q"] = pc.q;
    if (mix) {
        rec.summary["guaranteed_gap"] = mix->gap;
        rec.summary["log10_required_rounds"] = std::log10(2 * std::log(3.0)) - 2 * std::log10(mix->gap);
    }
    rec.summary["threshold"] = res.threshold;
    rec.summary["decision"] = res.accepted ? "accept" : "reject";
    rec.summary["calculation_labels_covered"] = calculation_labels_covered(pc.params, pc.pattern);
    return rec;
}

BoundRequest request_from_json(const Json &j) {
    if (!j.is_object() || !j.contains("kind")) {
        throw InvalidArgument("each bound request needs a 'kind'");
    }
    BoundRequest req;
    req.kind = parse_bound_kind(j["kind"].get<std::string>());
    if (j.contains("params")) {
        for (const auto &[k, v] : j["params"].items()) {
            if (!v.is_number()) {
                throw InvalidArgument("bound parameter '" + k + "' must be a number");
            }
            req.params[k] = v.get<double>();
        }
    }
    if (j.contains("bits")) {
        for (const auto &[k, v] : j["bits"].items()) {
            req.bits[k] = BitString::from_string(v.get<std::string>());
        }
    }
    return req;
}

Json reference_bound_requests() {
    auto r = [](const char *kind, Json params) { return Json{{"kind", kind}, {"params", std::move(params)}}; };
    return Json::array({
        r("graph-test", {{"pp", 1}, {"n", 12}, {"edges", 23}, {"eps", 1e-6}}),
        r("anticommute", {{"eps", 1e-6}}),
        r("product-anticommute", {{"st", 2}, {"eps", 1e-6}}),
        r("stabilizer-product", {{"tAt", 2}, {"tt", 3}, {"eps", 1e-6}}),
        r("rotation", {{"eps", 1e-6}, {"delta", 1e-3}}),
        r("adaptive-state", {{"n", 12}, {"m", 4}, {"delta", 1e-3}}),
        r("adaptive-probability", {{"n", 12}, {"delta", 1e-3}}),
        r("test-eps", {{"n", 12}, {"delta", 0.1}}),
        r("test-delta", {{"n", 12}, {"eps", 1e-12}}),
        r("test-gap", {{"n", 12}, {"delta", 0.1}, {"N_G", 40}}),
        r("soundness-gap", {{"n", 12}, {"delta", 0.1}}),
        r("mix-q", {{"c_test", 0.9}, {"s_test", 0.8}, {"s_calc", 1.0 / 3}, {"delta", 0.1}}),
        r("mix-exact-gap", {{"c_test", 0.9}, {"s_test", 0.8}, {"s_calc", 1.0 / 3}, {"c_calc", 2.0 / 3}, {"delta", 0.1}}),
        r("mix-gap", {{"n", 12}, {"delta", 0.1}}),
        r("repetitions", {{"gap", 0.2}}),
        r("total-repetitions", {{"n", 12}, {"delta", 0.1}}),
    });
}

ResultRecord run_bounds(const ExperimentConfig &cfg) {
    Json requests = cfg.bounds.is_null() ? reference_bound_requests() : resolve_file(cfg.bounds);
    if (!requests.is_array()) {
        throw InvalidArgument("bounds must be an array of requests");
    }
    ResultRecord rec;
    for (const auto &j : requests) {
        BoundRequest req = request_from_json(j);
        BoundResult res = evaluate(req);
        Json inputs = Json::object();
        for (const auto &[k, v] : req.params) {
            inputs[k] = v;
        }
        for (const auto &[k, v] : req.bits) {
            inputs[k] = v.str();
        }
        rec.rows.push_back(
            Json{{"kind", bound_name(req.kind)}, {"inputs", inputs}, {"value", res.value}, {"formula", res.formula}});
    }
    rec.summary = Json{{"trials", 0}, {"formulas", rec.rows.size()}};
    return rec;
}

uint64_t fnv1a(const std::string &s) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace

const char *experiment_kind_name(ExperimentKind kind) {
    for (const auto &[k, name] : kKinds) {
        if (k == kind) {
            return name;
        }
    }
    return "?";
}

ExperimentKind parse_experiment_kind(const std::string &name) {
    for (const auto &[k, n] : kKinds) {
        if (name == n) {
            return k;
        }
    }
    throw InvalidArgument("unknown experiment kind '" + name + "' (selftest, mbqc, isometry, protocol, bounds)");
}

ExperimentConfig ExperimentConfig::from_json(const Json &j) {
    if (!j.is_object()) {
        throw InvalidArgument("experiment config must be a JSON object");
    }
    for (const auto &[k, v] : j.items()) {
        if (!kConfigKeys.count(k)) {
            throw InvalidArgument("unknown config key '" + k + "'");
        }
    }
    ExperimentConfig c;
    try {
        c.kind = parse_experiment_kind(j.at("kind").get<std::string>());
        if (j.contains("graph")) {
            c.graph = j["graph"].get<std::string>();
        }
        if (j.contains("theta")) {
            c.theta = j["theta"];
        }
        if (j.contains("strategy")) {
            c.strategy = j["strategy"];
        }
        c.pattern = j.value("pattern", Json());
        c.labels = j.value("labels", Json());
        c.bounds = j.value("bounds", Json());
        c.trials = j.value("trials", size_t{0});
        if (j.contains("seed") && !j["seed"].is_null()) {
            c.seed = j["seed"].get<uint64_t>();
        }
        c.jobs = j.value("jobs", 1);
        c.q = j.value("q", 0.5);
        if (j.contains("threshold") && !j["threshold"].is_null()) {
            c.threshold = j["threshold"].get<double>();
        }
        if (j.contains("soundness") && !j["soundness"].is_null()) {
            c.soundness = j["soundness"].get<double>();
        }
        if (j.contains("delta") && !j["delta"].is_null()) {
            c.delta = j["delta"].get<double>();
        }
    } catch (const nlohmann::json::exception &e) {
        throw InvalidArgument(std::string("malformed experiment config: ") + e.what());
    }
    return c;
}

Json ExperimentConfig::to_json() const {
    Json j{{"kind", experiment_kind_name(kind)},
           {"graph", graph},
           {"theta", theta},
           {"strategy", strategy},
           {"pattern", pattern},
           {"labels", labels},
           {"bounds", bounds},
           {"trials", trials},
           {"seed", seed ? Json(*seed) : Json()},
           {"q", q},
           {"threshold", threshold ? Json(*threshold) : Json()},
           {"soundness", soundness ? Json(*soundness) : Json()}};
    if (delta) {
        j["delta"] = *delta;
    }
    return j;
}

std::string ExperimentConfig::digest() const {
    std::ostringstream out;
    out << std::hex;
    out.width(16);
    out.fill('0');
    out << fnv1a(to_json().dump());
    return out.str();
}

void ExperimentConfig::validate() const {
    if (jobs < 1) {
        throw InvalidArgument("--jobs must be at least 1");
    }
    if (needs_seed(*this)) {
        if (!seed) {
            throw InvalidArgument(std::string(experiment_kind_name(kind)) + " is stochastic and needs --seed");
        }
        if (trials == 0) {
            throw InvalidArgument(std::string(experiment_kind_name(kind)) + " needs --trials > 0");
        }
    }
    if (kind != ExperimentKind::Bounds && !is_graph_family(graph) && !std::filesystem::exists(graph)) {
        throw InvalidArgument("graph file '" + graph + "' does not exist");
    }
    for (const Json *file : {&pattern, &labels, &bounds}) {
        if (file->is_string() && !std::filesystem::exists(file->get<std::string>())) {
            throw InvalidArgument("file '" + file->get<std::string>() + "' does not exist");
        }
    }
    if ((kind == ExperimentKind::Mbqc || kind == ExperimentKind::Protocol) && pattern.is_null()) {
        throw InvalidArgument(std::string(experiment_kind_name(kind)) + " needs a measurement pattern (--pattern)");
    }
    if (kind == ExperimentKind::Protocol) {
        if (!(q >= 0 && q <= 1)) {
            throw InvalidArgument("q must lie in [0, 1]");
        }
        if (delta && !(*delta > 0 && *delta <= 1.0 / 6.0)) {
            throw InvalidArgument("delta must lie in (0, 1/6]");
        }
        if (!threshold && !soundness && !delta) {
            throw InvalidArgument("protocol needs --threshold, --soundness, or --delta to set the accept threshold");
        }
    }
}

void ResultRecord::write_jsonl(std::ostream &out) const {
    for (const auto &r : rows) {
        out << r.dump() << '\n';
    }
    out << Json{{"summary", summary}, {"config", config}, {"digest", digest}}.dump() << '\n';
}

std::string ResultRecord::jsonl() const {
    std::ostringstream out;
    write_jsonl(out);
    return out.str();
}

ResultRecord ResultRecord::parse_jsonl(const std::string &text) {
    ResultRecord rec;
    std::istringstream in(text);
    std::string line;
    std::vector<Json> lines;
    while (std::getline(in, line)) {
        if (!line.empty()) {
            lines.push_back(Json::parse(line));
        }
    }
    if (lines.empty() || !lines.back().contains("summary")) {
        throw InvalidArgument("result stream has no summary footer");
    }
    Json footer = lines.back();
    lines.pop_back();
    rec.rows = std::move(lines);
    rec.summary = footer["summary"];
    rec.config = footer["config"];
    rec.digest = footer["digest"].get<std::string>();
    return rec;
}

void ResultRecord::write_csv(std::ostream &out) const {
    std::vector<std::string> columns;
    std::set<std::string> seen;
    for (const auto &r : rows) {
        for (const auto &[k, v] : r.items()) {
            if (seen.insert(k).second) {
                columns.push_back(k);
            }
        }
    }
    auto cell = [](const Json &v) {
        std::string s = v.is_string() ? v.get<std::string>() : v.dump();
        if (s.find_first_of(",\"\n") != std::string::npos) {
            std::string quoted = "\"";
            for (char c : s) {
                quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
            }
            return quoted + "\"";
        }
        return s;
    };
    for (size_t i = 0; i < columns.size(); i++) {
        out << (i ? "," : "") << columns[i];
    }
    out << '\n';
    for (const auto &r : rows) {
        for (size_t i = 0; i < columns.size(); i++) {
            out << (i ? "," : "") << (r.contains(columns[i]) ? cell(r[columns[i]]) : "");
        }
        out << '\n';
    }
}

bool ResultRecord::operator==(const ResultRecord &other) const {
    return digest == other.digest && config == other.config && rows == other.rows && summary == other.summary;
}

double recompute_rate(const std::vector<Json> &rows) {
    size_t accepted = 0;
    for (const auto &r : rows) {
        accepted += r.at("accepted").get<bool>() ? 1 : 0;
    }
    return rows.empty() ? 0.0 : static_cast<double>(accepted) / static_cast<double>(rows.size());
}

ResultRecord run_experiment(const ExperimentConfig &cfg) {
    cfg.validate();
    ResultRecord rec;
    switch (cfg.kind) {
        case ExperimentKind::SelfTest:
            rec = run_selftest(cfg);
            break;
        case ExperimentKind::Mbqc:
            rec = run_mbqc(cfg);
            break;
        case ExperimentKind::Isometry:
            rec = run_isometry(cfg);
            break;
        case ExperimentKind::Protocol:
            rec = run_protocol(cfg);
            break;
        case ExperimentKind::Bounds:
            rec = run_bounds(cfg);
            break;
    }
    rec.config = cfg.to_json();
    rec.digest = cfg.digest();
    rec.summary["kind"] = experiment_kind_name(cfg.kind);
    rec.summary["prng"] = kPrngFamily;
    rec.summary["seed"] = cfg.seed ? Json(*cfg.seed) : Json();
    return rec;
}

}  // namespace clusterproof
