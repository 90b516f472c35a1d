// Copyright 2026 The zxamp authors
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

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zxamp/circuit.hpp"
#include "zxamp/driver.hpp"

namespace py = pybind11;
using namespace zxamp;

namespace {

py::dict stats_dict(const RunStats& s) {
    py::dict d;
    d["initial_t"] = s.initial_t;
    d["leaf_terms"] = s.leaf_terms;
    d["max_depth"] = s.max_depth;
    d["wall_seconds"] = s.wall_seconds;
    d["effective_alpha"] = s.effective_alpha;
    py::dict kinds;
    for (int k = 0; k < 8; k++)
        if (s.decompositions_by_kind[k])
            kinds[decomp_kind_name(static_cast<DecompKind>(k))] =
                s.decompositions_by_kind[k];
    d["decompositions"] = kinds;
    return d;
}

StrategyKind strategy_arg(const std::string& name) {
    auto s = strategy_from_name(name);
    if (!s.has_value())
        throw py::value_error("strategy must be one of 'cats', 'bss', 'naive'");
    return *s;
}

} // namespace

PYBIND11_MODULE(_zxamp, m) {
    m.doc() = "exact Clifford+T amplitudes via ZX-calculus stabiliser decompositions";

    m.def(
        "simulate_qasm",
        [](const std::string& qasm, const std::string& in_spec,
           const std::string& out_spec, const std::string& strategy, unsigned workers) {
            Circuit c = parse_qasm(qasm);
            std::string in = in_spec.empty() ? std::string(c.qubits, '0') : in_spec;
            std::string out = out_spec.empty() ? std::string(c.qubits, '0') : out_spec;
            SimOptions opts;
            opts.strategy = strategy_arg(strategy);
            opts.workers = workers;
            SimResult res = amplitude(circuit_to_diagram(c, in, out), opts);
            return py::make_tuple(res.amplitude.to_complex(),
                                  res.amplitude.to_string(), stats_dict(res.stats));
        },
        py::arg("qasm"), py::arg("in_spec") = "", py::arg("out_spec") = "",
        py::arg("strategy") = "cats", py::arg("workers") = 1,
        "Returns (amplitude, exact_scalar_text, stats) for a closed diagram.");

    m.def(
        "dense_oracle",
        [](const std::string& qasm, const std::string& in_spec,
           const std::string& out_spec) {
            Circuit c = parse_qasm(qasm);
            return dense_oracle(c, in_spec, out_spec);
        },
        py::arg("qasm"), py::arg("in_spec"), py::arg("out_spec"),
        "State-vector amplitude for circuits of up to 14 qubits.");

    m.def(
        "gen_cliffordt_qasm",
        [](uint32_t qubits, uint32_t tcount, uint64_t seed) {
            return to_qasm(gen_random_cliffordt(qubits, tcount, seed));
        },
        py::arg("qubits"), py::arg("tcount"), py::arg("seed"));

    m.def(
        "gen_hiddenshift_qasm",
        [](uint32_t qubits, uint32_t ccz, uint64_t seed) {
            auto inst = gen_hidden_shift(qubits, ccz, seed);
            std::string shift;
            for (auto b : inst.shift) shift.push_back(b ? '1' : '0');
            return py::make_tuple(to_qasm(inst.circuit), shift);
        },
        py::arg("qubits"), py::arg("ccz"), py::arg("seed"),
        "Returns (qasm, shift) for a hidden-shift benchmark instance.");
}
