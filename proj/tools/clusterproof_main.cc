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

// Command-line driver: graph generation, seeded experiments, bound
// evaluation, full protocol runs, and the acceptance suite.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "clusterproof/acceptance.h"
#include "clusterproof/bounds.h"
#include "clusterproof/errors.h"
#include "clusterproof/experiment.h"
#include "clusterproof/io.h"
#include "clusterproof/selftest.h"

namespace cp = clusterproof;

namespace {

/// A flag value that may be inline JSON, a bare word, or a file path.
cp::Json json_arg(const std::string &text) {
    if (text.empty()) {
        return cp::Json();
    }
    try {
        return cp::Json::parse(text);
    } catch (const nlohmann::json::parse_error &) {
    }
    if (std::filesystem::exists(text)) {
        return cp::read_json_file(text);
    }
    return cp::Json(text);
}

struct Common {
    std::string graph = "k3";
    std::string theta = "0.7853981633974483";
    std::string strategy = "honest";
    size_t trials = 0;
    std::optional<uint64_t> seed;
    int jobs = 1;
    std::string out;
    std::string csv;
};

void add_common(CLI::App *app, Common &c, bool stochastic) {
    app->add_option("--graph", c.graph, "k3, complete:N, strip:N, lattice:RxC, or a graph JSON file")
        ->capture_default_str();
    app->add_option("--theta", c.theta, "Angle for every vertex, a JSON array/object, or a file")
        ->capture_default_str();
    app->add_option("--strategy", c.strategy, "honest, or a strategy JSON object/file")->capture_default_str();
    if (stochastic) {
        app->add_option("--trials", c.trials, "Number of seeded trials");
        app->add_option("--seed", c.seed, "Master seed (required for stochastic runs)");
    }
    app->add_option("--jobs", c.jobs, "Worker threads; output order does not depend on this")
        ->capture_default_str();
    app->add_option("--out", c.out, "Write JSON-lines rows plus summary footer here (default: stdout)");
    app->add_option("--csv", c.csv, "Also write the rows as CSV here");
}

cp::ExperimentConfig base_config(cp::ExperimentKind kind, const Common &c) {
    cp::ExperimentConfig cfg;
    cfg.kind = kind;
    cfg.graph = c.graph;
    cfg.theta = json_arg(c.theta);
    cp::Json s = json_arg(c.strategy);
    cfg.strategy = s.is_string() ? cp::Json{{"kind", s.get<std::string>()}} : s;
    cfg.trials = c.trials;
    cfg.seed = c.seed;
    cfg.jobs = c.jobs;
    return cfg;
}

void emit(const cp::ResultRecord &rec, const Common &c) {
    if (c.out.empty()) {
        rec.write_jsonl(std::cout);
    } else {
        std::ofstream f(c.out);
        if (!f) {
            throw cp::InvalidArgument("cannot write '" + c.out + "'");
        }
        rec.write_jsonl(f);
        std::cout << rec.summary.dump(2) << std::endl;
    }
    if (!c.csv.empty()) {
        std::ofstream f(c.csv);
        if (!f) {
            throw cp::InvalidArgument("cannot write '" + c.csv + "'");
        }
        rec.write_csv(f);
    }
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Simulator and verifier for self-tested graph-state interactive proofs"};
    app.require_subcommand(1);

    // gen-graph
    auto *gen = app.add_subcommand("gen-graph", "Print a graph as JSON");
    std::string gen_spec = "lattice:3x4";
    std::string gen_out;
    bool gen_cover = false;
    gen->add_option("--graph", gen_spec, "k3, complete:N, strip:N, lattice:RxC")->capture_default_str();
    int lat_rows = 0;
    int lat_cols = 0;
    gen->add_option("--rows", lat_rows, "Lattice rows (with --cols)");
    gen->add_option("--cols", lat_cols, "Lattice columns (with --rows)");
    gen->add_flag("--cover", gen_cover, "Include the greedy triangle cover");
    gen->add_option("--out", gen_out, "Output file (default: stdout)");

    // selftest / mbqc / isometry-check
    Common st;
    auto *selftest = app.add_subcommand("selftest", "Run seeded one-shot tests");
    add_common(selftest, st, true);

    Common mb;
    std::string mb_pattern;
    auto *mbqc = app.add_subcommand("mbqc", "Run a measurement pattern against provers");
    add_common(mbqc, mb, true);
    mbqc->add_option("--pattern", mb_pattern, "Pattern JSON object or file")->required();

    Common iso;
    std::string iso_labels;
    auto *isometry = app.add_subcommand("isometry-check", "Measure equivalence distances after the swap isometry");
    add_common(isometry, iso, false);
    isometry->add_option("--labels", iso_labels, "Label list JSON or file (default: all single-vertex labels)");

    // bounds
    auto *bounds = app.add_subcommand("bounds", "Evaluate a closed-form bound, or print the reference table");
    std::string bound_kind;
    std::map<std::string, double> bound_params;
    std::map<std::string, std::string> bound_bits;
    std::string bounds_out;
    bounds->add_option("--kind", bound_kind, "Bound kind, e.g. graph-test (alias thm2), rotation, repetitions");
    for (const char *name : {"eps", "delta", "n", "m", "edges", "pp", "st", "tAt", "tt", "N_G", "c_test", "s_test",
                             "s_calc", "c_calc", "gap", "error"}) {
        bounds->add_option_function<double>(std::string("--") + name,
                                            [&bound_params, name](double v) { bound_params[name] = v; });
    }
    for (const char *name : {"p", "s", "t"}) {
        bounds->add_option_function<std::string>(std::string("--") + name,
                                                 [&bound_bits, name](const std::string &v) { bound_bits[name] = v; },
                                                 "Bit string");
    }
    bool bound_chain = false;
    bounds->add_flag("--chain", bound_chain, "Print the composed chain for --n, --edges, --eps");
    bounds->add_option("--out", bounds_out, "Output file (default: stdout)");

    // prove
    Common pr;
    std::string pr_pattern;
    double pr_q = 0.5;
    std::optional<double> pr_threshold;
    std::optional<double> pr_soundness;
    std::optional<double> pr_delta;
    auto *prove = app.add_subcommand("prove", "Run the amplified protocol; exit 0 on accept, 1 on reject");
    add_common(prove, pr, true);
    prove->add_option("--pattern", pr_pattern, "Pattern JSON object or file")->required();
    prove->add_option("--q", pr_q, "Probability of a CALCULATE round")->capture_default_str();
    prove->add_option("--threshold", pr_threshold, "Accept iff the accept count exceeds this");
    prove->add_option("--soundness", pr_soundness,
                      "Per-round acceptance bound for cheaters; threshold is the midpoint with the honest rate");
    prove->add_option("--delta", pr_delta,
                      "Robustness parameter in (0, 1/6]; sets q and the cheater bound from the closed-form gap");

    // run
    std::string run_config;
    Common run_common;
    auto *run = app.add_subcommand("run", "Run an experiment from a JSON config file");
    run->add_option("config", run_config, "Experiment config JSON")->required();
    run->add_option("--jobs", run_common.jobs, "Worker threads")->capture_default_str();
    run->add_option("--out", run_common.out, "JSON-lines output file (default: stdout)");
    run->add_option("--csv", run_common.csv, "CSV output file");

    // accept
    int acc_jobs = 1;
    std::vector<int> acc_only;
    auto *accept = app.add_subcommand("accept", "Run the acceptance suite; one PASS/FAIL line per criterion");
    accept->add_option("--jobs", acc_jobs, "Worker threads")->capture_default_str();
    accept->add_option("--only", acc_only, "Criterion numbers to run (default: all)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            cp::Graph g = lat_rows > 0 && lat_cols > 0 ? cp::triangular_lattice(lat_rows, lat_cols)
                                                         : cp::graph_from_spec(gen_spec);
            cp::Json j = cp::graph_to_json(g);
            if (gen_cover) {
                cp::Json tris = cp::Json::array();
                for (const auto &t : cp::triangle_cover(g).triangles) {
                    tris.push_back(t.indices());
                }
                j["cover"] = tris;
            }
            if (gen_out.empty()) {
                std::cout << j.dump() << std::endl;
            } else {
                std::ofstream(gen_out) << j.dump() << std::endl;
            }
            return 0;
        }
        if (*selftest) {
            emit(cp::run_experiment(base_config(cp::ExperimentKind::SelfTest, st)), st);
            return 0;
        }
        if (*mbqc) {
            auto cfg = base_config(cp::ExperimentKind::Mbqc, mb);
            cfg.pattern = json_arg(mb_pattern);
            emit(cp::run_experiment(cfg), mb);
            return 0;
        }
        if (*isometry) {
            auto cfg = base_config(cp::ExperimentKind::Isometry, iso);
            cfg.labels = json_arg(iso_labels);
            auto rec = cp::run_experiment(cfg);
            emit(rec, iso);
            return rec.summary["all_satisfied"].get<bool>() ? 0 : 1;
        }
        if (*bounds) {
            cp::Json out;
            if (bound_chain) {
                out = cp::Json::array();
                for (const auto &stage : cp::bound_chain_report(static_cast<int>(bound_params.at("n")),
                                                                static_cast<int>(bound_params.at("edges")),
                                                                bound_params.at("eps"))) {
                    out.push_back({{"stage", stage.name}, {"formula", stage.formula}, {"value", stage.value}});
                }
            } else if (bound_kind.empty()) {
                cp::ExperimentConfig cfg;
                cfg.kind = cp::ExperimentKind::Bounds;
                Common c;
                c.out = bounds_out;
                emit(cp::run_experiment(cfg), c);
                return 0;
            } else {
                cp::BoundRequest req;
                req.kind = cp::parse_bound_kind(bound_kind);
                req.params = bound_params;
                for (const auto &[k, v] : bound_bits) {
                    req.bits[k] = cp::BitString::from_string(v);
                }
                cp::BoundResult res = cp::evaluate(req);
                cp::Json inputs = cp::Json::object();
                for (const auto &[k, v] : bound_params) {
                    inputs[k] = v;
                }
                for (const auto &[k, v] : bound_bits) {
                    inputs[k] = v;
                }
                out = {{"kind", cp::bound_name(req.kind)}, {"value", res.value}, {"formula", res.formula},
                       {"inputs", inputs}};
            }
            if (bounds_out.empty()) {
                std::cout << out.dump(2) << std::endl;
            } else {
                std::ofstream(bounds_out) << out.dump(2) << std::endl;
            }
            return 0;
        }
        if (*prove) {
            auto cfg = base_config(cp::ExperimentKind::Protocol, pr);
            cfg.pattern = json_arg(pr_pattern);
            cfg.q = pr_q;
            cfg.threshold = pr_threshold;
            cfg.soundness = pr_soundness;
            cfg.delta = pr_delta;
            auto rec = cp::run_experiment(cfg);
            emit(rec, pr);
            bool accepted = rec.summary["decision"].get<std::string>() == "accept";
            std::cerr << (accepted ? "ACCEPT" : "REJECT") << std::endl;
            return accepted ? 0 : 1;
        }
        if (*run) {
            auto cfg = cp::ExperimentConfig::from_json(cp::read_json_file(run_config));
            cfg.jobs = run_common.jobs;
            emit(cp::run_experiment(cfg), run_common);
            return 0;
        }
        if (*accept) {
            cp::AcceptanceOptions opts;
            opts.jobs = acc_jobs;
            opts.only = acc_only;
            auto results = cp::run_acceptance(opts, std::cout);
            for (const auto &r : results) {
                if (!r.pass) {
                    return 1;
                }
            }
            return 0;
        }
    } catch (const std::out_of_range &) {
        std::cerr << "error: --chain needs --n, --edges, and --eps" << std::endl;
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 2;
    }
    return 0;
}
