// Copyright 2026 The chemqfa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "chemqfa/baselines.hpp"
#include "chemqfa/chem.hpp"
#include "chemqfa/errors.hpp"
#include "chemqfa/machines.hpp"
#include "chemqfa/records.hpp"
#include "chemqfa/simulator.hpp"
#include "chemqfa/spec_io.hpp"

namespace py = pybind11;
using namespace chemqfa;

namespace {

LanguageId language_of(const std::string& name) {
  auto id = parse_language(name);
  if (!id) throw InvalidParameter("unknown language '" + name + "'");
  return *id;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Two-way quantum finite automata for chemical reaction languages.";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<SymbolError>(m, "SymbolError", error.ptr());
  py::register_exception<CompletionError>(m, "CompletionError", error.ptr());
  py::register_exception<InvalidParameter>(m, "InvalidParameter", error.ptr());
  py::register_exception<SpecError>(m, "SpecError", error.ptr());
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<UnknownSpecies>(m, "UnknownSpecies", error.ptr());

  py::class_<TwoWayQfaSpec>(m, "Machine")
      .def_readonly("name", &TwoWayQfaSpec::name)
      .def_readonly("path_count", &TwoWayQfaSpec::path_count)
      .def_readonly("states", &TwoWayQfaSpec::states)
      .def_readonly("input_alphabet", &TwoWayQfaSpec::input_alphabet)
      .def_property_readonly("num_states", &TwoWayQfaSpec::num_states)
      .def("unitary", [](const TwoWayQfaSpec& s, char symbol) { return Matrix(s.unitary(symbol)); })
      .def("to_text", [](const TwoWayQfaSpec& s) { return write_spec(s); })
      .def("__repr__", [](const TwoWayQfaSpec& s) {
        return "<Machine " + s.name + " N=" + std::to_string(s.path_count) + " states=" +
               std::to_string(s.num_states()) + ">";
      });

  py::class_<TracePoint>(m, "TracePoint")
      .def_readonly("p_accept", &TracePoint::p_accept)
      .def_readonly("p_reject", &TracePoint::p_reject)
      .def_readonly("residual", &TracePoint::residual);

  py::class_<RunResult>(m, "RunResult")
      .def_readonly("p_accept", &RunResult::p_accept)
      .def_readonly("p_reject", &RunResult::p_reject)
      .def_readonly("p_residual", &RunResult::p_residual)
      .def_readonly("steps", &RunResult::steps)
      .def_readonly("halted", &RunResult::halted)
      .def_readonly("trace", &RunResult::trace)
      .def_property_readonly("accepts", [](const RunResult& r) { return accepts(r); });

  m.def("build_machine", &build_machine, py::arg("name"), py::arg("n_paths") = 5);
  m.def("load_machine", &read_spec, py::arg("text"));
  m.def("qft_matrix", &qft_matrix, py::arg("n"));

  m.def(
      "validate",
      [](const TwoWayQfaSpec& spec, double tolerance) {
        const auto r = validate(spec, tolerance);
        py::dict d;
        d["ok"] = r.ok();
        d["max_violation"] = r.max_violation();
        d["unitarity"] = r.unitarity.max_violation;
        d["local_probability"] = r.local_probability.max_violation;
        d["separability1"] = r.separability1.max_violation;
        d["separability2"] = r.separability2.max_violation;
        d["padded_entries"] = r.padded_entries.size();
        return d;
      },
      py::arg("spec"), py::arg("tolerance") = kTolerance);

  m.def(
      "run",
      [](const TwoWayQfaSpec& spec, const std::string& word, std::optional<std::size_t> max_steps,
         double halt_threshold, bool trace) {
        RunOptions options;
        options.max_steps = max_steps;
        options.halt_threshold = halt_threshold;
        options.trace = trace;
        py::gil_scoped_release release;
        return run(spec, word, options);
      },
      py::arg("spec"), py::arg("word"), py::arg("max_steps") = py::none(),
      py::arg("halt_threshold") = kDefaultHaltThreshold, py::arg("trace") = false);

  m.def(
      "membership", [](const std::string& language, const std::string& word) {
        return membership(language_of(language), word);
      },
      py::arg("language"), py::arg("word"));

  m.def(
      "sweep",
      [](const TwoWayQfaSpec& spec, const std::string& language, std::size_t max_len, unsigned threads) {
        SweepOptions options;
        options.threads = threads;
        DiscrepancyReport report;
        {
          py::gil_scoped_release release;
          report = sweep_compare(spec, language_of(language), max_len, options);
        }
        return report_to_structured(report);
      },
      py::arg("spec"), py::arg("language"), py::arg("max_len"), py::arg("threads") = 1,
      "Returns the discrepancy report as a JSON document.");

  m.def(
      "transcribe", [](const std::string& recipe_text) { return transcribe(parse_recipe(recipe_text)); },
      py::arg("recipe_text"));
}
