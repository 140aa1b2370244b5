#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "pathres/cli.hpp"
#include "pathres/document.hpp"
#include "pathres/errors.hpp"
#include "pathres/examples.hpp"

namespace py = pybind11;
using nlohmann::json;

namespace {

pathres::ExampleParams params_from(const std::map<std::string, std::string>& values,
                                   const std::map<std::string, long>& ints, const std::string& system) {
  pathres::ExampleParams p;
  p.values = values;
  p.ints = ints;
  p.system = system;
  return p;
}

struct Outcome {
  std::string report;
  int exit_code;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<pathres::Error>(m, "PathresError", PyExc_RuntimeError);

  m.attr("__version__") = pathres::kVersion;

  m.def("example_names", &pathres::example_names);

  m.def(
      "example_document",
      [](const std::string& name, const std::map<std::string, std::string>& values,
         const std::map<std::string, long>& ints, const std::string& system) {
        return pathres::to_json(pathres::example(name, params_from(values, ints, system)).doc).dump();
      },
      py::arg("name"), py::arg("values") = std::map<std::string, std::string>{},
      py::arg("ints") = std::map<std::string, long>{}, py::arg("system") = "");

  m.def(
      "run_task",
      [](const std::string& doc_json, bool latex) {
        auto doc = pathres::parse_document(doc_json);
        pathres::TaskOutcome o;
        {
          py::gil_scoped_release release;
          o = pathres::run_task(doc, {latex});
        }
        return py::make_tuple(o.result.dump(), o.exit_code);
      },
      py::arg("doc_json"), py::arg("latex") = false);

  m.def(
      "self_test",
      [](const std::string& name, const std::map<std::string, std::string>& values,
         const std::map<std::string, long>& ints, const std::string& system) {
        auto ex = pathres::example(name, params_from(values, ints, system));
        pathres::TaskOutcome o;
        {
          py::gil_scoped_release release;
          o = pathres::self_test(ex);
        }
        return py::make_tuple(o.result.dump(), o.exit_code);
      },
      py::arg("name"), py::arg("values") = std::map<std::string, std::string>{},
      py::arg("ints") = std::map<std::string, long>{}, py::arg("system") = "");

  m.def(
      "cli",
      [](std::vector<std::string> args) {
        args.insert(args.begin(), "pathres");
        std::vector<const char*> argv;
        for (auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out, err;
        int code = pathres::run(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
