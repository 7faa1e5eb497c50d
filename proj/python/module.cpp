#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "edgelease/model.hpp"
#include "edgelease/oracle.hpp"
#include "edgelease/scenario.hpp"
#include "edgelease/selector.hpp"

namespace py = pybind11;
using namespace edgelease;

namespace {

SolveOptions make_options(const std::string& semantics, bool strict_globals) {
  SolveOptions options;
  if (semantics == "subset") {
    options.semantics = Semantics::subset;
  } else if (semantics != "reference") {
    throw Error("semantics must be 'reference' or 'subset'");
  }
  options.strict_globals = strict_globals;
  return options;
}

py::list portions_to_py(const std::vector<PortionResult>& results) {
  py::list out;
  for (const PortionResult& r : results) {
    py::dict d;
    d["portion"] = r.portion.members;
    d["profit"] = r.profit;
    out.append(d);
  }
  return out;
}

py::dict solve_file(const std::string& scenario_path,
                    const std::string& request_id, const std::string& semantics,
                    bool strict_globals) {
  Scenario scenario = load_scenario(scenario_path);
  const Request* request = scenario.find_request(request_id);
  if (!request) throw Error("no request '" + request_id + "' in scenario");
  SolveResult result = solve(*request, scenario.infrastructure,
                             scenario.registry,
                             make_options(semantics, strict_globals));
  py::dict out;
  out["request_id"] = request_id;
  out["semantics_mode"] = semantics;
  out["optimal"] = portions_to_py(result.optimal);
  out["eligible_count"] = result.eligible_count;
  out["expansions"] = result.stats.expansions;
  out["elapsed_ms"] = result.stats.elapsed.count();
  return out;
}

py::list enumerate_file(const std::string& scenario_path,
                        const std::string& request_id,
                        const std::string& semantics, bool strict_globals) {
  Scenario scenario = load_scenario(scenario_path);
  const Request* request = scenario.find_request(request_id);
  if (!request) throw Error("no request '" + request_id + "' in scenario");
  return portions_to_py(enumerate_portions(
      *request, scenario.infrastructure, scenario.registry,
      make_options(semantics, strict_globals)));
}

py::list validate_file(const std::string& scenario_path) {
  Scenario scenario = load_scenario(scenario_path);
  py::list out;
  for (const Violation& v :
       validate_infrastructure(scenario.infrastructure, scenario.registry)) {
    out.append(v.subject + ": " + v.message);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_edgelease, m) {
  m.doc() = "Cloud-Edge portion broker: profit-maximal resource selection";

  py::register_exception<Error>(m, "BrokerError");

  m.def("solve", &solve_file, py::arg("scenario_path"), py::arg("request_id"),
        py::arg("semantics") = "reference", py::arg("strict_globals") = false,
        "Solve a request from a scenario file; returns the optimal portions, "
        "the eligible count and search stats.");
  m.def("enumerate", &enumerate_file, py::arg("scenario_path"),
        py::arg("request_id"), py::arg("semantics") = "reference",
        py::arg("strict_globals") = false,
        "List every eligible portion with its profit.");
  m.def("validate", &validate_file, py::arg("scenario_path"),
        "Load a scenario and return the list of validation violations.");
}
