#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gzkit/errors.hpp"
#include "gzkit/expr.hpp"
#include "gzkit/jobs.hpp"
#include "gzkit/latwalk.hpp"
#include "gzkit/skewops.hpp"

namespace py = pybind11;
using nlohmann::json;

namespace {

gzkit::JobSpec spec_from(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw gzkit::ValidationError(e.what());
  }
  return gzkit::parse_job_spec(doc);
}

}  // namespace

PYBIND11_MODULE(gzkit, m) {
  m.doc() = "Exact computations in orthogonal Gelfand-Zeitlin algebras";

  py::exception<gzkit::Error>(m, "GzkitError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const gzkit::Error& e) {
      py::object type = py::module_::import("gzkit").attr("GzkitError");
      py::object exc = type(e.what());
      exc.attr("kind") = e.kind();
      exc.attr("exit_code") = gzkit::exit_code_for(e);
      PyErr_SetObject(type.ptr(), exc.ptr());
    }
  });

  m.def("commands", &gzkit::job_commands);

  m.def(
      "run_job",
      [](const std::string& command, const std::string& spec) {
        gzkit::JobSpec s = spec_from(spec);
        py::gil_scoped_release release;
        return gzkit::run_job(command, s);
      },
      py::arg("command"), py::arg("spec"), "Run a CLI job on a JSON spec and return its output text.");

  m.def(
      "validate_spec", [](const std::string& spec) { spec_from(spec); }, py::arg("spec"));

  m.def(
      "parse_expr",
      [](const std::string& text, const std::vector<int>& lambda) {
        if (lambda.empty()) return gzkit::parse_expr(text).render();
        return gzkit::parse_expr(text, gzkit::Composition(lambda)).render();
      },
      py::arg("text"), py::arg("lambda_") = std::vector<int>{});

  m.def(
      "apply",
      [](const std::vector<int>& lambda, const std::string& op, const std::string& expr) {
        gzkit::Composition c(lambda);
        return gzkit::apply(gzkit::generator_by_name(c, op), gzkit::parse_expr(expr, c)).render();
      },
      py::arg("lambda_"), py::arg("op"), py::arg("expr"));

  m.def(
      "find_path",
      [](const std::vector<long>& start, const std::vector<long>& target) {
        std::vector<std::tuple<std::vector<long>, std::vector<long>, std::string>> out;
        for (const gzkit::Move& mv : gzkit::find_path(gzkit::LatticeState(start), gzkit::LatticeState(target)))
          out.emplace_back(mv.from.coords(), mv.to.coords(), gzkit::render_kind(mv.kind));
        return out;
      },
      py::arg("start"), py::arg("target"));

  m.def(
      "flagged_arrows",
      [](const std::string& walk) { return gzkit::validate_walk(gzkit::parse_walk(walk)).flagged; },
      py::arg("walk"));
}
