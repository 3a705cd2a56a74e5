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

#ifndef CLUSTERPROOF_EXPERIMENT_H
#define CLUSTERPROOF_EXPERIMENT_H

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "clusterproof/io.h"

namespace clusterproof {

enum class ExperimentKind { SelfTest, Mbqc, Isometry, Protocol, Bounds };

const char *experiment_kind_name(ExperimentKind kind);
ExperimentKind parse_experiment_kind(const std::string &name);

struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::SelfTest;
    /// Graph spec: "k3", "strip:5", "lattice:3x4", "complete:4" or a JSON file.
    std::string graph = "k3";
    /// Number, array, or object; see theta_from_json.
    Json theta = 0.7853981633974483;
    /// Strategy object; see provers_from_json.
    Json strategy = Json{{"kind", "honest"}};
    /// Pattern object or a path to a pattern file (mbqc, protocol).
    Json pattern;
    /// Label list or a path to a label file (isometry). Empty means all
    /// single-vertex labels.
    Json labels;
    /// Bound requests [{"kind": ..., "params": {...}, "bits": {...}}]
    /// (bounds). Empty means the reference table.
    Json bounds;
    size_t trials = 0;
    std::optional<uint64_t> seed;
    int jobs = 1;
    /// Protocol: CALCULATE probability, and an explicit accept threshold on
    /// the accept count. Without a threshold, the midpoint between the
    /// exact honest round acceptance and `soundness` is used.
    double q = 0.5;
    std::optional<double> threshold;
    std::optional<double> soundness;
    /// Protocol: robustness parameter. When set, q comes from the mixing
    /// formula with s_test = c_test - delta^8 / (10^17.7 n^11), c_calc = 2/3
    /// and s_calc = 1/3, and `soundness` defaults to the honest round
    /// probability minus the guaranteed gap.
    std::optional<double> delta;

    static ExperimentConfig from_json(const Json &j);
    Json to_json() const;
    /// Hex FNV-1a digest of the canonical JSON form.
    std::string digest() const;
    /// Throws InvalidArgument with a message naming the missing piece.
    void validate() const;
};

struct ResultRecord {
    std::string digest;
    Json config;
    std::vector<Json> rows;
    Json summary;

    /// Rows, one per line, then a footer line {"summary", "config", "digest"}.
    void write_jsonl(std::ostream &out) const;
    std::string jsonl() const;
    static ResultRecord parse_jsonl(const std::string &text);
    /// One header line with the union of row keys, then one line per row.
    void write_csv(std::ostream &out) const;

    bool operator==(const ResultRecord &other) const;
};

ResultRecord run_experiment(const ExperimentConfig &cfg);

/// Recomputes rate = accepted / trials from rows carrying an "accepted"
/// field, exactly as run_experiment does.
double recompute_rate(const std::vector<Json> &rows);

}  // namespace clusterproof

#endif
