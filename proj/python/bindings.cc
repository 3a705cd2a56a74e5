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

// Python bindings. Structured inputs (strategies, patterns, configs) cross
// the boundary as JSON text; the package wrapper converts to and from dicts.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "clusterproof/acceptance.h"
#include "clusterproof/bounds.h"
#include "clusterproof/errors.h"
#include "clusterproof/experiment.h"
#include "clusterproof/graphstate.h"
#include "clusterproof/io.h"
#include "clusterproof/mbqc.h"
#include "clusterproof/selftest.h"

namespace py = pybind11;
using namespace clusterproof;

namespace {

std::vector<std::vector<int>> cover_of(const Graph &g) {
    std::vector<std::vector<int>> out;
    for (const auto &t : triangle_cover(g).triangles) {
        out.push_back(t.indices());
    }
    return out;
}

ProverSet strategy(const std::string &json, const Graph &g, const std::vector<double> &theta) {
    return provers_from_json(Json::parse(json), g, theta);
}

py::dict bound(const std::string &kind, const std::map<std::string, double> &params,
               const std::map<std::string, std::string> &bits) {
    BoundRequest req;
    req.kind = parse_bound_kind(kind);
    req.params = params;
    for (const auto &[k, v] : bits) {
        req.bits[k] = BitString::from_string(v);
    }
    BoundResult r = evaluate(req);
    py::dict out;
    out["kind"] = bound_name(req.kind);
    out["value"] = r.value;
    out["formula"] = r.formula;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Graph-state self-testing and verified measurement-based computation";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<MissingParameter>(m, "MissingParameter", PyExc_KeyError);
    py::register_exception<CapacityExceeded>(m, "CapacityExceeded", base.ptr());
    py::register_exception<UncoverableVertex>(m, "UncoverableVertex", base.ptr());
    py::register_exception<NotATriangle>(m, "NotATriangle", base.ptr());
    py::register_exception<ImaginaryResidue>(m, "ImaginaryResidue", base.ptr());
    py::register_exception<NormUnderflow>(m, "NormUnderflow", base.ptr());
    py::register_exception<JunkDegenerate>(m, "JunkDegenerate", base.ptr());
    // Malformed JSON from the wrapper surfaces as ValueError.
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const nlohmann::json::exception &e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    py::class_<Graph>(m, "Graph")
        .def(py::init<int, const std::vector<Edge> &>(), py::arg("n"), py::arg("edges") = std::vector<Edge>{})
        .def_property_readonly("n", &Graph::n)
        .def_property_readonly("edges", &Graph::edges)
        .def("adjacent", &Graph::adjacent)
        .def("degree", &Graph::degree)
        .def("__eq__", &Graph::operator==)
        .def("__repr__", [](const Graph &g) {
            return "Graph(n=" + std::to_string(g.n()) + ", edges=" + std::to_string(g.edge_count()) + ")";
        });

    m.def("triangular_lattice", &triangular_lattice, py::arg("rows"), py::arg("cols"));
    m.def("triangle_strip", &triangle_strip, py::arg("n"));
    m.def("complete_graph", &complete_graph, py::arg("n"));
    m.def("graph_from_spec", &graph_from_spec, py::arg("spec"));
    m.def("local_complement", &local_complement, py::arg("graph"), py::arg("vertex"));
    m.def("triangle_cover", &cover_of, py::arg("graph"), "Greedy triangle cover as sorted vertex triples.");

    m.def(
        "graph_state",
        [](const Graph &g) {
            StateVector s = build_graph_state(g).state;
            return std::vector<Complex>(s.amplitudes().begin(), s.amplitudes().end());
        },
        py::arg("graph"), "Amplitudes of |G>, little-endian.");

    m.def(
        "c_test",
        [](const Graph &g, const std::vector<double> &theta) { return c_test(TestParameters::make(g, theta)); },
        py::arg("graph"), py::arg("theta"));
    m.def(
        "exact_pass_probability",
        [](const Graph &g, const std::vector<double> &theta, const std::string &strategy_json) {
            return exact_pass_probability(strategy(strategy_json, g, theta), TestParameters::make(g, theta));
        },
        py::arg("graph"), py::arg("theta"), py::arg("strategy_json"));
    m.def(
        "pattern_distribution",
        [](const Graph &g, const std::vector<double> &theta, const std::string &strategy_json,
           const std::string &pattern_json) {
            return pattern_distribution(strategy(strategy_json, g, theta), pattern_from_json(Json::parse(pattern_json)));
        },
        py::arg("graph"), py::arg("theta"), py::arg("strategy_json"), py::arg("pattern_json"));
    m.def(
        "reference_distribution",
        [](const Graph &g, const std::string &pattern_json) {
            return reference_run(g, pattern_from_json(Json::parse(pattern_json)));
        },
        py::arg("graph"), py::arg("pattern_json"));

    m.def("bound", &bound, py::arg("kind"), py::arg("params"),
          py::arg("bits") = std::map<std::string, std::string>{});
    m.def("hoeffding_repetitions", &hoeffding_repetitions, py::arg("gap"), py::arg("error") = 1.0 / 3.0);
    m.def(
        "choose_q",
        [](double c_test, double s_test, double s_calc, double delta, double c_calc) {
            QChoice c = choose_q(c_test, s_test, s_calc, delta, c_calc);
            return std::pair<double, double>(c.q, c.gap);
        },
        py::arg("c_test"), py::arg("s_test"), py::arg("s_calc"), py::arg("delta"), py::arg("c_calc") = 2.0 / 3.0);

    m.def(
        "run_experiment",
        [](const std::string &config_json, int jobs) {
            ExperimentConfig cfg = ExperimentConfig::from_json(Json::parse(config_json));
            cfg.jobs = jobs;
            ResultRecord rec;
            {
                py::gil_scoped_release release;
                rec = run_experiment(cfg);
            }
            return rec.jsonl();
        },
        py::arg("config_json"), py::arg("jobs") = 1, "Runs an experiment; returns JSON lines ending in the summary.");

    m.def("acceptance_criterion_count", &acceptance_criterion_count);
    m.def(
        "acceptance_criterion",
        [](int id, int jobs) {
            AcceptanceOptions opts;
            opts.jobs = jobs;
            CriterionResult r;
            {
                py::gil_scoped_release release;
                r = run_criterion(id, opts);
            }
            return py::make_tuple(r.pass, r.name, r.detail);
        },
        py::arg("id"), py::arg("jobs") = 1);
}
